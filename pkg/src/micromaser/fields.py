"""Initial cavity field ensembles: Fock states and thermal mixtures.

A thermal field is handled as an incoherent mixture of Fock components with
geometric weights p(n) = nbar^n / (1+nbar)^(n+1), truncated once the
discarded tail mass drops below a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["FieldSpec", "truncation_for", "weights"]

DEFAULT_TAIL_EPS = 1.0e-10


@dataclass(frozen=True)
class FieldSpec:
    """Initial field ensemble.

    kind is "fock" (value = photon number) or "thermal" (value = mean
    occupation nbar).  Truncation of thermal tails is controlled by
    tail_eps unless an explicit n_max override is given.
    """

    kind: str
    value: float
    n_max: int | None = None
    tail_eps: float = DEFAULT_TAIL_EPS

    def __post_init__(self):
        if self.kind not in ("fock", "thermal"):
            raise ValueError(f"field kind must be 'fock' or 'thermal', got {self.kind!r}")
        if self.kind == "fock":
            if self.value != int(self.value) or self.value < 0:
                raise ValueError(
                    f"Fock occupation must be a non-negative integer, got {self.value!r}"
                )
        else:
            if not (math.isfinite(self.value) and self.value >= 0.0):
                raise ValueError(f"thermal nbar must be finite and >= 0, got {self.value!r}")
        if not (0.0 < self.tail_eps < 1.0):
            raise ValueError(f"tail_eps must lie in (0, 1), got {self.tail_eps!r}")
        if self.n_max is not None and (self.n_max != int(self.n_max) or self.n_max < 0):
            raise ValueError(f"n_max override must be a non-negative integer, got {self.n_max!r}")

    @classmethod
    def fock(cls, m: int, **kwargs) -> "FieldSpec":
        return cls("fock", int(m), **kwargs)

    @classmethod
    def thermal(cls, nbar: float, **kwargs) -> "FieldSpec":
        return cls("thermal", float(nbar), **kwargs)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse 'fock:2' or 'thermal:0.5'."""
        kind, sep, arg = text.strip().partition(":")
        kind = kind.strip().lower()
        if not sep or kind not in ("fock", "thermal"):
            raise ValueError(
                f"field must look like 'fock:<m>' or 'thermal:<nbar>', got {text!r}"
            )
        try:
            value = int(arg) if kind == "fock" else float(arg)
        except ValueError:
            raise ValueError(f"bad field argument in {text!r}") from None
        return cls(kind, value)

    def label(self) -> str:
        if self.kind == "fock":
            return f"fock:{int(self.value)}"
        return f"thermal:{self.value:g}"


def truncation_for(field: FieldSpec, tail_eps: float | None = None) -> int:
    """Smallest N keeping the discarded thermal tail mass below tail_eps.

    The geometric tail past N has mass q^(N+1) with q = nbar/(1+nbar), so N
    solves q^(N+1) < tail_eps in closed form; the result is nudged to undo
    floating-point edge effects.  Fock fields truncate at their occupation.
    An explicit n_max on the FieldSpec wins over the tolerance.
    """
    if field.n_max is not None:
        return field.n_max
    eps = field.tail_eps if tail_eps is None else tail_eps
    if not (0.0 < eps < 1.0):
        raise ValueError(f"tail_eps must lie in (0, 1), got {eps!r}")
    if field.kind == "fock":
        return int(field.value)
    nbar = field.value
    if nbar == 0.0:
        return 0
    q = nbar / (1.0 + nbar)
    n = max(0, math.ceil(math.log(eps) / math.log(q)) - 1)
    while q ** (n + 1) >= eps:
        n += 1
    while n > 0 and q ** n < eps:
        n -= 1
    return n


def weights(field: FieldSpec) -> list[tuple[int, float]]:
    """Photon-number weights (n, p(n)) of the truncated ensemble.

    Fock fields give a single unit weight.  Thermal weights are not
    renormalized after truncation; their sum falls short of one by the
    discarded tail mass (< tail_eps).
    """
    if field.kind == "fock":
        return [(int(field.value), 1.0)]
    n_top = truncation_for(field)
    nbar = field.value
    if nbar == 0.0:
        return [(0, 1.0)]
    q = nbar / (1.0 + nbar)
    head = 1.0 / (1.0 + nbar)
    return [(n, head * q**n) for n in range(n_top + 1)]
