"""Result containers shared by the solver and the closed forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .verify import Witness, witness_to_dict


@dataclass
class FormulaTrace:
    """Intermediate values behind a closed-form evaluation.

    ``k_star`` is a minimizer of s(k) (the loop optimizer reports the
    smallest one); the ``*_at`` fields are evaluated at ``k_star``.
    ``ceil_x_star`` is filled only in the four-case otherwise branch.
    """

    n: int
    m: Optional[int] = None
    case_label: Optional[str] = None
    k_star: Optional[int] = None
    ceil_x_star: Optional[int] = None
    f_at: Optional[int] = None
    g_at: Optional[int] = None
    F_at: Optional[int] = None
    G_at: Optional[int] = None
    s_at: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "case_label": self.case_label,
            "k_star": self.k_star,
            "ceil_x_star": self.ceil_x_star,
            "f_at": self.f_at,
            "g_at": self.g_at,
            "F_at": self.F_at,
            "G_at": self.G_at,
            "s_at": self.s_at,
        }


@dataclass(frozen=True)
class CrownSplit:
    """Selected-vertex counts on the two sides; always within one of each other."""

    p: int
    q: int

    def __post_init__(self):
        if abs(self.p - self.q) > 1:
            raise ValueError("split sides must differ by at most 1")


@dataclass
class SgResult:
    value: int
    method: str  # exact | closed_form | lower_bound | upper_bound | construction
    witness: Optional[Witness] = None
    trace: Optional[FormulaTrace] = None
    split: Optional[CrownSplit] = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "witness": witness_to_dict(self.witness) if self.witness else None,
            "trace": self.trace.to_dict() if self.trace else None,
            "split": [self.split.p, self.split.q] if self.split else None,
        }
