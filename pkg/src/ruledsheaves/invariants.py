"""Exact Chern-data arithmetic on birationally ruled surfaces.

Everything here is integer valued except :func:`slope`. Riemann-Roch uses
``χ(O_S) = 1 - g``, which holds for every birationally ruled surface over a
curve of genus ``g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisError, IntegralityError, UnsupportedSurfaceError
from .lattice import DivisorClass, RuledSurface, canonical_class, intersect


@dataclass(frozen=True)
class ChernData:
    """Rank and Chern classes of a sheaf class.

    Rank 0 is allowed for sheaves supported on curves; it only shows up as
    the torsion quotient in the degree-zero base case.
    """

    rank: int
    c1: DivisorClass
    c2: int

    def __post_init__(self):
        if self.rank < 0:
            raise HypothesisError(f"rank must be nonnegative, got {self.rank}")
        if not isinstance(self.c1, DivisorClass):
            object.__setattr__(self, "c1", DivisorClass(self.c1))

    def __str__(self) -> str:
        return f"(r={self.rank}, c1={self.c1}, c2={self.c2})"


def direct_sum(S: RuledSurface, a: ChernData, b: ChernData) -> ChernData:
    """Chern data of ``A ⊕ B``: ``c2 = c2(A) + c2(B) + c1(A)·c1(B)``."""
    return ChernData(a.rank + b.rank, a.c1 + b.c1, a.c2 + b.c2 + intersect(S, a.c1, b.c1))


def line_bundle(S: RuledSurface, D: DivisorClass) -> ChernData:
    S.check(D)
    return ChernData(1, D, 0)


def _half(n: int, what: str) -> int:
    if n % 2:
        raise IntegralityError(f"{what} = {n} is odd; Riemann-Roch halving is not exact")
    return n // 2


def chern_of_twist(S: RuledSurface, c: ChernData, L: DivisorClass) -> ChernData:
    """Chern data of ``E ⊗ O(L)``."""
    S.check(c.c1, L)
    r = c.rank
    c2 = c.c2 + (r - 1) * intersect(S, L, c.c1) + r * (r - 1) // 2 * intersect(S, L, L)
    return ChernData(r, c.c1 + r * L, c2)


def euler_char(S: RuledSurface, c: ChernData) -> int:
    """``χ(E) = r(1-g) + c1·(c1 - K)/2 - c2``."""
    S.check(c.c1)
    K = canonical_class(S)
    half = _half(intersect(S, c.c1, c.c1 - K), "c1·(c1 - K)")
    return c.rank * (1 - S.genus) + half - c.c2


def euler_pairing(S: RuledSurface, a: ChernData, b: ChernData) -> int:
    """``χ(A, B) = Σ (-1)^i dim Ext^i(A, B)`` from ``∫ ch(A)^∨ ch(B) td(S)``.

    With ``ch = (r, c1, c1²/2 - c2)`` the integrand expands to

        r_a r_b (1-g) - r_a c2(B) - r_b c2(A) - c1(A)·c1(B)
            + r_a c1(B)·(c1(B) - K)/2 + r_b c1(A)·(c1(A) + K)/2

    and both halvings are exact because ``D² ≡ D·K (mod 2)``.
    """
    S.check(a.c1, b.c1)
    K = canonical_class(S)
    ha = _half(intersect(S, a.c1, a.c1 + K), "c1(A)·(c1(A) + K)")
    hb = _half(intersect(S, b.c1, b.c1 - K), "c1(B)·(c1(B) - K)")
    return (
        a.rank * b.rank * (1 - S.genus)
        - a.rank * b.c2
        - b.rank * a.c2
        - intersect(S, a.c1, b.c1)
        + a.rank * hb
        + b.rank * ha
    )


def discriminant(S: RuledSurface, c: ChernData) -> int:
    """``Δ = 2 r c2 - (r - 1) c1²``."""
    S.check(c.c1)
    return 2 * c.rank * c.c2 - (c.rank - 1) * intersect(S, c.c1, c.c1)


def slope(S: RuledSurface, H: DivisorClass, c: ChernData) -> Fraction:
    if c.rank == 0:
        raise HypothesisError("slope is undefined for rank 0")
    return Fraction(intersect(S, H, c.c1), c.rank)


def stack_dim(S: RuledSurface, c: ChernData) -> int:
    """Dimension ``-χ(E, E)`` of the (smooth) stack of sheaves with data ``c``.

    Equals ``Δ - r²(1 - g)``; negative values are legitimate.
    """
    return -euler_pairing(S, c, c)


def pullback_from_curve(S: RuledSurface, n: int, k: int) -> ChernData:
    """Chern data ``(n, k·f, 0)`` of ``π*V`` for a bundle ``V`` of rank n, degree k on C."""
    if not S.is_geometrically_ruled:
        raise UnsupportedSurfaceError("pullback from the base curve is only modelled on F(g, e)")
    if n < 1:
        raise HypothesisError(f"rank must be at least 1, got {n}")
    return ChernData(n, k * S.fiber, 0)
