"""Néron-Severi lattices of birationally ruled surfaces.

A surface is modelled as a geometrically ruled surface ``F(g, e)`` over a
curve of genus ``g`` (minimal section ``σ`` with ``σ² = -e``) followed by
``n`` blowups at general points. Divisor classes are integer vectors in the
ordered basis ``(σ, f, E_1, ..., E_n)`` and the intersection form is

    (aσ + bf + Σ c_i E_i) · (a'σ + b'f + Σ c'_i E_i)
        = -e·aa' + ab' + a'b - Σ c_i c'_i

Blowups happen at distinct points off ``σ``, so every ``E_i`` is orthogonal
to ``σ``, ``f`` and the other exceptional classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionMismatchError, NoBlowdownError, UnsupportedSurfaceError


@dataclass(frozen=True)
class DivisorClass:
    """Integer coordinates of a numerical divisor class."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def _check(self, other: DivisorClass) -> None:
        if len(self.coeffs) != len(other.coeffs):
            raise DimensionMismatchError(
                f"classes of lengths {len(self.coeffs)} and {len(other.coeffs)} are incompatible"
            )

    def __add__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        self._check(other)
        return DivisorClass(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> DivisorClass:
        return DivisorClass(-a for a in self.coeffs)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(k * a for a in self.coeffs)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        names = ["σ", "f"] + [f"E_{i}" for i in range(1, len(self.coeffs) - 1)]
        terms = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, f"{mag}{name}"))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out


@dataclass(frozen=True)
class RuledSurface:
    """A geometrically ruled surface ``F(genus, e)`` blown up ``blowups`` times.

    Only ``e >= 0`` is supported; negative ``e`` raises
    :class:`UnsupportedSurfaceError` at construction.
    """

    genus: int
    e_invariant: int
    blowups: int = 0

    def __post_init__(self):
        if self.genus < 0:
            raise UnsupportedSurfaceError(f"genus must be nonnegative, got {self.genus}")
        if self.e_invariant < 0:
            raise UnsupportedSurfaceError(
                f"e = {self.e_invariant} < 0 is not supported (ampleness criteria only for e >= 0)"
            )
        if self.blowups < 0:
            raise UnsupportedSurfaceError(f"blowup count must be nonnegative, got {self.blowups}")

    @property
    def picard_number(self) -> int:
        return 2 + self.blowups

    @property
    def is_geometrically_ruled(self) -> bool:
        return self.blowups == 0

    def check(self, *classes: DivisorClass) -> None:
        """Raise :class:`DimensionMismatchError` unless every class lives on this surface."""
        for D in classes:
            if len(D) != self.picard_number:
                raise DimensionMismatchError(
                    f"class {tuple(D)} has {len(D)} coordinates, surface has Picard number "
                    f"{self.picard_number}"
                )

    def divisor(self, *coeffs: int) -> DivisorClass:
        D = DivisorClass(coeffs)
        self.check(D)
        return D

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * self.picard_number)

    def _unit(self, i: int) -> DivisorClass:
        v = [0] * self.picard_number
        v[i] = 1
        return DivisorClass(v)

    @property
    def sigma(self) -> DivisorClass:
        return self._unit(0)

    @property
    def fiber(self) -> DivisorClass:
        return self._unit(1)

    def exceptional(self, i: int) -> DivisorClass:
        """The class ``E_i``, 1-based as in the basis naming."""
        if not 1 <= i <= self.blowups:
            raise IndexError(f"surface has exceptional classes E_1..E_{self.blowups}, not E_{i}")
        return self._unit(1 + i)

    def blow_down(self) -> RuledSurface:
        """Contract the last exceptional curve."""
        if self.blowups == 0:
            raise NoBlowdownError("surface is geometrically ruled; nothing to blow down")
        return RuledSurface(self.genus, self.e_invariant, self.blowups - 1)

    def base(self) -> RuledSurface:
        return RuledSurface(self.genus, self.e_invariant, 0)

    def __str__(self) -> str:
        s = f"F(g={self.genus}, e={self.e_invariant})"
        if self.blowups:
            s += f" blown up at {self.blowups} general point{'s' if self.blowups > 1 else ''}"
        return s


def make_geometrically_ruled(g: int, e: int) -> RuledSurface:
    return RuledSurface(g, e, 0)


def blow_up(S: RuledSurface) -> RuledSurface:
    """Blow up one more general point; classes on ``S`` embed via :func:`pullback_class`."""
    return RuledSurface(S.genus, S.e_invariant, S.blowups + 1)


def intersect(S: RuledSurface, D1: DivisorClass, D2: DivisorClass) -> int:
    S.check(D1, D2)
    a, b, *c = D1.coeffs
    a2, b2, *c2 = D2.coeffs
    return -S.e_invariant * a * a2 + a * b2 + a2 * b - sum(x * y for x, y in zip(c, c2))


def self_intersection(S: RuledSurface, D: DivisorClass) -> int:
    return intersect(S, D, D)


def canonical_class(S: RuledSurface) -> DivisorClass:
    """``K = -2σ + (2g - 2 - e)f + Σ E_i``."""
    return DivisorClass((-2, 2 * S.genus - 2 - S.e_invariant) + (1,) * S.blowups)


def fiber_class(S: RuledSurface) -> DivisorClass:
    return S.fiber


def pushforward_class(S: RuledSurface, D: DivisorClass) -> DivisorClass:
    """Push ``D`` forward along the contraction of the last exceptional curve."""
    S.check(D)
    if S.blowups == 0:
        raise NoBlowdownError("pushforward needs at least one blowup")
    return DivisorClass(D.coeffs[:-1])


def pullback_class(D: DivisorClass) -> DivisorClass:
    """Pull ``D`` back along the next blowup (append a zero coordinate)."""
    return DivisorClass(D.coeffs + (0,))


def gram_matrix(S: RuledSurface) -> list[list[int]]:
    basis = [S._unit(i) for i in range(S.picard_number)]
    return [[intersect(S, x, y) for y in basis] for x in basis]
