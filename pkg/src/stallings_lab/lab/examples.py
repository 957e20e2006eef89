"""
The two known counterexample families.

``example_iehnc`` breaks the inclusion/exclusion inequality with a ratio that
grows without bound; ``example_guzman`` is a rank-5 pair whose join has rank 6.
"""

from typing import List, Tuple
import logging

from ..core.errors import ContractViolation, StallingsLabError
from ..core.subgroup import Subgroup, intersect, join
from ..core.words import Word, reduce

logger = logging.getLogger(__name__)

# Alphabet of the rank-6 pair: a b c d x y are generators 1..6.
GUZMAN_NAMES = ("a", "b", "c", "d", "x", "y")
_A, _B, _C, _D, _X, _Y = range(1, 7)


def _w(*codes: int) -> Word:
    return reduce(codes)


def iehnc_generators(v: int, l: int) -> Tuple[List[Word], List[Word]]:
    """x1^i x2 x1^-(i+1) for i < v-1 together with x3..x_{l+2}; and x1, x2."""
    h = [_w(*([1] * i), 2, *([-1] * (i + 1))) for i in range(v - 1)]
    h.extend(_w(a) for a in range(3, l + 3))
    return h, [_w(1), _w(2)]


def example_iehnc(v: int, l: int) -> Tuple[Subgroup, Subgroup]:
    """Pair in F of rank l+2 with reduced ranks (v+l-2, 1, v-2, l+1)."""
    if v < 3 or l < 1:
        raise ContractViolation(f"example_iehnc needs v >= 3 and l >= 1, got v={v}, l={l}")
    h_words, k_words = iehnc_generators(v, l)
    rank = l + 2
    H = Subgroup.from_words(rank, h_words)
    K = Subgroup.from_words(rank, k_words)
    found = (H.reduced_rank, K.reduced_rank,
             intersect(H, K).reduced_rank, join(H, K).reduced_rank)
    expected = (v + l - 2, 1, v - 2, l + 1)
    if found != expected:
        raise StallingsLabError(f"example_iehnc({v}, {l}) has reduced ranks {found}, "
                                f"expected {expected}")
    logger.debug("example_iehnc(%d, %d) built in rank %d", v, l, rank)
    return H, K


def guzman_generators() -> Tuple[List[Word], List[Word]]:
    h = [_w(_A), _w(_B), _w(_X), _w(_Y, _Y), _w(_Y, _X, -_Y)]
    k = [_w(_C), _w(_D), _w(_Y), _w(_X, _X), _w(_X, _Y, -_X)]
    return h, k


def guzman_meet_generators() -> List[Word]:
    """Free basis of the intersection: y², yx²y⁻¹, x², yxy⁻¹x, yxyx."""
    return [
        _w(_Y, _Y),
        _w(_Y, _X, _X, -_Y),
        _w(_X, _X),
        _w(_Y, _X, -_Y, _X),
        _w(_Y, _X, _Y, _X),
    ]


def example_guzman() -> Tuple[Subgroup, Subgroup]:
    """H = ⟨a, b, x, y², yxy⁻¹⟩ and K = ⟨c, d, y, x², xyx⁻¹⟩ in F(a, b, c, d, x, y)."""
    h_words, k_words = guzman_generators()
    return (Subgroup.from_words(len(GUZMAN_NAMES), h_words),
            Subgroup.from_words(len(GUZMAN_NAMES), k_words))
