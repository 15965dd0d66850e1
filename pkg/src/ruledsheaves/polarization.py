"""Polarizations ``H`` with ``H·(K_S + f) < 0``.

On ``F(g, e)`` with ``e >= 0`` the class ``aσ + bf`` is ample iff ``a > 0``
and ``b > ae``. Each blowup replaces ``H_1`` by ``2α*(H_1) - E``, which
stays ample and changes the pairing with ``K_S + f`` to ``2·(old) + 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .lattice import (
    DivisorClass,
    RuledSurface,
    canonical_class,
    intersect,
    pullback_class,
    self_intersection,
)


class Verdict(str, enum.Enum):
    AMPLE = "ample"
    NOT_AMPLE = "not-ample"
    NECESSARY_CHECKS_PASSED = "necessary-checks-passed"


@dataclass(frozen=True)
class AmpleCheck:
    name: str
    value: int

    @property
    def passed(self) -> bool:
        return self.value > 0


def theorem_condition(S: RuledSurface, H: DivisorClass) -> int:
    """Return ``H·(K_S + f)``; the hypothesis holds iff this is negative."""
    return intersect(S, H, canonical_class(S) + S.fiber)


def _base_is_ample(S: RuledSurface, H: DivisorClass) -> bool:
    a, b = H.coeffs[:2]
    return a > 0 and b > a * S.e_invariant


def certificate_chain(S: RuledSurface, H: DivisorClass) -> list[DivisorClass] | None:
    """Unwind ``H = 2α*(H_1) - E_n`` down to the geometrically ruled base.

    Returns ``[H_0, H_1, ..., H_n = H]`` when every level has that shape and
    ``H_0`` is ample on ``F(g, e)``, otherwise ``None``.
    """
    S.check(H)
    chain = [H]
    cur = H
    for _ in range(S.blowups):
        *rest, last = cur.coeffs
        if last != -1 or any(x % 2 for x in rest):
            return None
        cur = DivisorClass(x // 2 for x in rest)
        chain.append(cur)
    if not _base_is_ample(S.base(), cur):
        return None
    return chain[::-1]


def necessary_checks(S: RuledSurface, H: DivisorClass) -> list[AmpleCheck]:
    """Nakai-style positivity against ``H²`` and the curves σ, f, E_i, f - E_i."""
    checks = [
        AmpleCheck("H^2", self_intersection(S, H)),
        AmpleCheck("H.f", intersect(S, H, S.fiber)),
        AmpleCheck("H.sigma", intersect(S, H, S.sigma)),
    ]
    for i in range(1, S.blowups + 1):
        E = S.exceptional(i)
        checks.append(AmpleCheck(f"H.E_{i}", intersect(S, H, E)))
        checks.append(AmpleCheck(f"H.(f-E_{i})", intersect(S, H, S.fiber - E)))
    return checks


def is_ample(S: RuledSurface, H: DivisorClass) -> Verdict:
    """Decide ampleness exactly on ``F(g, e)``; certify or pre-screen on blowups.

    On a blown-up surface the answer is ``AMPLE`` only if ``H`` unwinds through
    :func:`certificate_chain`. Any other class gets the finite list of
    :func:`necessary_checks`, which can refute but never prove ampleness.
    """
    S.check(H)
    if S.is_geometrically_ruled:
        return Verdict.AMPLE if _base_is_ample(S, H) else Verdict.NOT_AMPLE
    if certificate_chain(S, H) is not None:
        return Verdict.AMPLE
    if all(c.passed for c in necessary_checks(S, H)):
        return Verdict.NECESSARY_CHECKS_PASSED
    return Verdict.NOT_AMPLE


def minimal_fiber_coefficient(g: int, e: int) -> int:
    """Least ``b`` with ``b > e`` and ``2g - 1 + e - 2b < 0``."""
    return max(e + 1, (2 * g - 1 + e) // 2 + 1)


def construct_good_polarization(S: RuledSurface) -> DivisorClass:
    H = DivisorClass((1, minimal_fiber_coefficient(S.genus, S.e_invariant)))
    for _ in range(S.blowups):
        H = 2 * pullback_class(H) - DivisorClass((0,) * len(H) + (1,))
    return H
