"""Enumeration caps and run configuration."""
from dataclasses import dataclass, field, replace

from .errors import CapExceeded


@dataclass(frozen=True)
class Caps:
    aut_order: int = 24            # max |G| for brute-force Aut(G)
    hom_tuples: int = 10**7        # max |G|^n_generators in hom search
    cocycles: int = 10**6          # max |A|^((|P|-1)^n) in the cochain oracle
    monoidal: int = 10**6          # max candidate monoidal data
    table_order: int = 64          # max order when realizing a presentation
    extensions: int = 12           # max |P|*|G| for the extension oracle
    cohomology_dim: int = 4000     # max rank of a cochain group in the SNF pipeline

    def check(self, name, needed):
        cap = getattr(self, name)
        if needed > cap:
            raise CapExceeded(name, needed, cap)


DEFAULT_CAPS = Caps()


@dataclass(frozen=True)
class RunConfig:
    caps: Caps = field(default_factory=Caps)
    output: str = "table"
    seed: int = 0

    def __post_init__(self):
        for name, value in vars(self.caps).items():
            if value <= 0:
                raise ValueError(f"cap {name} must be positive, got {value}")
        if self.output not in ("table", "json"):
            raise ValueError(f"unknown output mode {self.output!r}")

    def with_caps(self, **overrides):
        return replace(self, caps=replace(self.caps, **overrides))
