"""
Inequality checks for a pair of subgroups.

HNC and SHNC are theorems, so a failing verdict there means a bug. The
inclusion/exclusion inequality (IEHNC) and Guzman's conjecture are false in
general; those verdicts are the interesting output.
"""

from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from typing import Any, Dict, Optional
import logging

from ..core.errors import NotASubgroupError
from ..core.subgroup import Subgroup, intersect, join, relative_index, shnc_left_side, INFINITE

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjectureReport:
    rk_H: int
    rk_K: int
    rk_meet: int
    rk_join: int
    shnc_sum: int
    finite_index_in_join: bool = False

    @property
    def rr_H(self) -> int:
        return max(0, self.rk_H - 1)

    @property
    def rr_K(self) -> int:
        return max(0, self.rk_K - 1)

    @property
    def rr_meet(self) -> int:
        return max(0, self.rk_meet - 1)

    @property
    def rr_join(self) -> int:
        return max(0, self.rk_join - 1)

    @property
    def iehnc_lhs(self) -> int:
        return self.rr_meet * self.rr_join

    @property
    def iehnc_rhs(self) -> int:
        return self.rr_H * self.rr_K

    @property
    def iehnc_ratio(self) -> Optional[Fraction]:
        return Fraction(self.iehnc_lhs, self.iehnc_rhs) if self.iehnc_rhs else None

    @property
    def holds_hnc(self) -> bool:
        return self.rr_meet <= self.rr_H * self.rr_K

    @property
    def holds_shnc(self) -> bool:
        return self.shnc_sum <= self.rr_H * self.rr_K

    @property
    def holds_iehnc(self) -> bool:
        return self.iehnc_lhs <= self.iehnc_rhs

    @property
    def guzman_applicable(self) -> bool:
        m = self.rk_H
        return self.rk_K == m and m >= 2 and self.rk_meet >= m

    @property
    def holds_guzman(self) -> bool:
        """Vacuously true when the hypothesis fails."""
        return not self.guzman_applicable or self.rk_join <= self.rk_H

    @property
    def counted(self) -> bool:
        """Both reduced ranks positive: the pair enters the counterexample statistic."""
        return self.rr_H > 0 and self.rr_K > 0

    @property
    def nontrivial_meet(self) -> bool:
        return self.rk_meet > 0

    def swapped(self) -> 'ConjectureReport':
        return replace(self, rk_H=self.rk_K, rk_K=self.rk_H)

    def to_dict(self) -> Dict[str, Any]:
        """All fields and verdicts in a stable order."""
        data = asdict(self)
        for name in ("rr_H", "rr_K", "rr_meet", "rr_join", "iehnc_lhs", "iehnc_rhs",
                     "holds_hnc", "holds_shnc", "holds_iehnc", "guzman_applicable", "holds_guzman"):
            data[name] = getattr(self, name)
        ratio = self.iehnc_ratio
        data["iehnc_ratio"] = None if ratio is None else f"{ratio.numerator}/{ratio.denominator}"
        return data

    def format(self) -> str:
        """key=value lines."""
        def render(value: Any) -> str:
            if isinstance(value, bool):
                return str(value).lower()
            return "none" if value is None else str(value)
        return "\n".join(f"{key}={render(value)}" for key, value in self.to_dict().items()) + "\n"


def _finite_in_join(sub: Subgroup, joined: Subgroup) -> bool:
    try:
        return relative_index(sub, joined) != INFINITE
    except NotASubgroupError:
        logger.error("Join does not contain its factor; this is a library bug")
        raise


def analyze_pair(H: Subgroup, K: Subgroup) -> ConjectureReport:
    """Ranks of H, K, H ∩ K, H ∨ K, the SHNC sum, and the derived verdicts."""
    meet = intersect(H, K)
    joined = join(H, K)
    report = ConjectureReport(
        rk_H=H.rank,
        rk_K=K.rank,
        rk_meet=meet.rank,
        rk_join=joined.rank,
        shnc_sum=shnc_left_side(H, K),
        finite_index_in_join=_finite_in_join(K, joined) or _finite_in_join(H, joined),
    )
    if not (report.holds_hnc and report.holds_shnc):
        logger.error("Proved inequality failed on %s", report.to_dict())
    return report
