"""Smith normal form over the integers, exact (Python ints throughout).

``smith_normal_form(M)`` returns unimodular U, V with U*M*V = S diagonal,
d1 | d2 | ... and every d_i >= 0. The lattice helpers below (kernels,
solving, image bases) are what the cohomology pipeline is built on.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix")
        return cls(len(rows), cols, tuple(tuple(int(x) for x in r) for r in rows))

    @classmethod
    def identity(cls, n):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def tolist(self):
        return [list(r) for r in self.entries]

    def __matmul__(self, other):
        return IntMatrix.from_rows(matmul(self.tolist(), other.tolist(), other.cols),
                                   other.cols)

    def diagonal(self):
        return [self.entries[i][i] for i in range(min(self.rows, self.cols))]

    def det(self):
        return det(self.tolist())


def matmul(a, b, b_cols):
    out = []
    for row in a:
        acc = [0] * b_cols
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(b_cols):
                    if bk[j]:
                        acc[j] += x * bk[j]
        out.append(acc)
    return out


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def det(a):
    """Bareiss fraction-free determinant."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


class _Reducer:
    """Row/column reduction of a dense integer matrix, recording transforms.

    Keeps U, V and optionally their inverses in sync with every elementary
    operation applied to the working matrix.
    """

    def __init__(self, rows, ncols, want_u, want_v, want_inverses):
        self.a = [list(r) for r in rows]
        self.m = len(rows)
        self.n = ncols
        self.u = _identity(self.m) if want_u else None
        self.v = _identity(self.n) if want_v else None
        self.uinv = _identity(self.m) if want_u and want_inverses else None
        self.vinv = _identity(self.n) if want_v and want_inverses else None

    # row i -= q * row t
    def row_sub(self, i, t, q):
        a = self.a
        ai, at = a[i], a[t]
        for j in range(self.n):
            if at[j]:
                ai[j] -= q * at[j]
        if self.u is not None:
            ui, ut = self.u[i], self.u[t]
            for j in range(self.m):
                if ut[j]:
                    ui[j] -= q * ut[j]
        if self.uinv is not None:
            for row in self.uinv:
                if row[i]:
                    row[t] += q * row[i]

    # col j -= q * col t
    def col_sub(self, j, t, q):
        for row in self.a:
            if row[t]:
                row[j] -= q * row[t]
        if self.v is not None:
            for row in self.v:
                if row[t]:
                    row[j] -= q * row[t]
        if self.vinv is not None:
            vj, vt = self.vinv[j], self.vinv[t]
            for k in range(self.n):
                if vj[k]:
                    vt[k] += q * vj[k]

    def row_swap(self, i, t):
        if i == t:
            return
        a = self.a
        a[i], a[t] = a[t], a[i]
        if self.u is not None:
            self.u[i], self.u[t] = self.u[t], self.u[i]
        if self.uinv is not None:
            for row in self.uinv:
                row[i], row[t] = row[t], row[i]

    def col_swap(self, j, t):
        if j == t:
            return
        for row in self.a:
            row[j], row[t] = row[t], row[j]
        if self.v is not None:
            for row in self.v:
                row[j], row[t] = row[t], row[j]
        if self.vinv is not None:
            self.vinv[j], self.vinv[t] = self.vinv[t], self.vinv[j]

    def row_neg(self, t):
        self.a[t] = [-x for x in self.a[t]]
        if self.u is not None:
            self.u[t] = [-x for x in self.u[t]]
        if self.uinv is not None:
            for row in self.uinv:
                row[t] = -row[t]

    def row_add(self, t, i):
        """row t += row i."""
        self.row_sub(t, i, -1)

    def _min_pivot(self, t):
        best = None
        for i in range(t, self.m):
            row = self.a[i]
            for j in range(t, self.n):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        return best
        return best

    def run(self):
        a = self.a
        t = 0
        while t < min(self.m, self.n):
            best = self._min_pivot(t)
            if best is None:
                break
            _, i, j = best
            self.row_swap(i, t)
            self.col_swap(j, t)
            while True:
                p = a[t][t]
                dirty = False
                for i in range(t + 1, self.m):
                    x = a[i][t]
                    if x:
                        self.row_sub(i, t, x // p)
                        if a[i][t]:
                            dirty = True
                for j in range(t + 1, self.n):
                    x = a[t][j]
                    if x:
                        self.col_sub(j, t, x // p)
                        if a[t][j]:
                            dirty = True
                if dirty:
                    # a remainder smaller than the pivot survives: make it the pivot
                    best = None
                    for i in range(t + 1, self.m):
                        if a[i][t] and (best is None or abs(a[i][t]) < best[0]):
                            best = (abs(a[i][t]), i, t)
                    for j in range(t + 1, self.n):
                        if a[t][j] and (best is None or abs(a[t][j]) < best[0]):
                            best = (abs(a[t][j]), t, j)
                    self.row_swap(best[1], t)
                    self.col_swap(best[2], t)
                    continue
                bad = None
                for i in range(t + 1, self.m):
                    row = a[i]
                    for j in range(t + 1, self.n):
                        if row[j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                self.row_add(t, bad)
            if a[t][t] < 0:
                self.row_neg(t)
            t += 1
        return self


def snf_lists(rows, ncols, want_u=True, want_v=True, want_inverses=False):
    """List-level SNF. Returns the reducer holding a (=S), u, v, uinv, vinv."""
    return _Reducer(rows, ncols, want_u, want_v, want_inverses).run()


def smith_normal_form(M):
    """(U, S, V) with U @ M @ V == S, U and V unimodular, S in Smith form."""
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_rows(M)
    r = snf_lists(M.tolist(), M.cols)
    return (IntMatrix.from_rows(r.u, M.rows), IntMatrix.from_rows(r.a, M.cols),
            IntMatrix.from_rows(r.v, M.cols))


def invariant_factors(M):
    """Nonzero diagonal of the Smith form, including the 1s."""
    if not isinstance(M, IntMatrix):
        M = IntMatrix.from_rows(M)
    r = snf_lists(M.tolist(), M.cols, want_u=False, want_v=False)
    return [r.a[i][i] for i in range(min(M.rows, M.cols)) if r.a[i][i]]


def kernel_basis(rows, ncols):
    """Z-basis (list of vectors) of {x : A x = 0} for A given by ``rows``."""
    r = snf_lists(rows, ncols, want_u=False, want_v=True)
    rank = sum(1 for i in range(min(r.m, ncols)) if r.a[i][i])
    return [[r.v[k][j] for k in range(ncols)] for j in range(rank, ncols)]


def column_space_basis(gens, dim):
    """Z-basis of the lattice spanned by vectors ``gens`` in Z^dim.

    Returned as a list of basis vectors.
    """
    if not gens:
        return []
    cols = len(gens)
    rows = [[g[i] for g in gens] for i in range(dim)]
    r = snf_lists(rows, cols, want_u=True, want_v=False, want_inverses=True)
    basis = []
    for j in range(min(dim, cols)):
        s = r.a[j][j]
        if s:
            basis.append([r.uinv[i][j] * s for i in range(dim)])
    return basis


def solve(rows, ncols, b):
    """Integer solution x of A x = b, or None if none exists."""
    r = snf_lists(rows, ncols, want_u=True, want_v=True)
    ub = matvec(r.u, b)
    y = [0] * ncols
    for i, val in enumerate(ub):
        d = r.a[i][i] if i < ncols else 0
        if d == 0:
            if val:
                return None
        else:
            if val % d:
                return None
            y[i] = val // d
    return matvec(r.v, y)


def abelian_invariants(rows, ncols):
    """Invariant factors of Z^ncols / rowspace(rows), 0 meaning a Z summand.

    Factors equal to 1 are dropped; the list is sorted with the
    divisibility chain first and free summands (0) last.
    """
    r = snf_lists(rows, ncols, want_u=False, want_v=False) if rows else None
    diag = [r.a[i][i] for i in range(min(len(rows), ncols))] if rows else []
    diag += [0] * (ncols - len(diag))
    torsion = [d for d in diag if d > 1]
    free = [0 for d in diag if d == 0]
    return torsion + free
