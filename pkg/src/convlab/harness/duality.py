"""Side-by-side check of completeness numbers against paving numbers on the dual.

For each closed target ``A`` of a *-regular convergence the ultra
completeness number is compared with the pavement number of the dual at
``A``, and the plain completeness number with the dagger pseudopaving
number.  The two sides are computed by separate exact searches.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..covers import completeness_number
from ..dual import DualSpace, alexandroff, is_star_regular
from ..paving import paving_number
from ..space import Convergence, closed_sets

DUALITY_CAP = 5


class NotStarRegular(ValueError):
    def __init__(self, kernel: int, text: str):
        self.kernel = kernel
        super().__init__(f"input is not *-regular: limits change at kernel {text}")


@dataclass(frozen=True)
class DualityRow:
    target: int
    compl: int
    ucompl: int
    pavement: int
    dagger: int
    classic_compl: int
    classic_ucompl: int
    note: str = ""

    @property
    def equal_ultra(self) -> bool:
        return self.ucompl == self.pavement

    @property
    def equal_plain(self) -> bool:
        return self.compl == self.dagger


def _star_failure(c: Convergence) -> int | None:
    pair = alexandroff(c)
    for k in c.carrier.kernels():
        if c.lim(pair.star(k)) != c.lim(k):
            return k
    return None


def duality_check(c: Convergence) -> list[DualityRow]:
    if c.size > DUALITY_CAP:
        raise ValueError(f"duality search is limited to carriers of size <= {DUALITY_CAP}")
    if not is_star_regular(c):
        k = _star_failure(c)
        raise NotStarRegular(k, c.carrier.format(k))
    d = DualSpace(c)
    rows = []
    for a in sorted(closed_sets(c), key=lambda m: (m.bit_count(), m)):
        plain = completeness_number(c, a, "plain")
        ultra = completeness_number(c, a, "ultra")
        at = d.point(a)
        pav = paving_number(d.conv, at, "pavement")
        dag = paving_number(d.conv, at, "dagger")
        note = ""
        if (plain.classic_value, ultra.classic_value) != (plain.value, ultra.value):
            note = (
                f"classic convention (empty collection allowed): compl={plain.classic_value} "
                f"ucompl={ultra.classic_value}"
            )
        rows.append(
            DualityRow(a, plain.value, ultra.value, pav.value, dag.value, plain.classic_value, ultra.classic_value, note)
        )
    return rows
