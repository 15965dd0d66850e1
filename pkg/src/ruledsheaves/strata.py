"""Splitting-type strata in the stack of coherent sheaves on P¹.

A sheaf on P¹ of rank r is ``O(a_1) ⊕ ... ⊕ O(a_r) ⊕ T`` with ``T`` torsion.
Only reduced torsion (``t`` distinct points) is modelled. The codimension
of a stratum is taken to be ``dim Ext¹(F, F)``:

* locally free: ``Σ_{i,j} h¹(O(a_j - a_i)) = Σ_{i,j} max(0, a_i - a_j - 1)``;
* with ``t`` reduced points: ``ext¹(V, V) + t·(r + 1)``, where the ``r``
  comes from ``Ext¹(O_p, V)`` and the ``1`` from ``Ext¹(O_p, O_p)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import HypothesisError, WindowError

DEFAULT_MIN_PART = -10


@dataclass(frozen=True, order=True)
class SplittingType:
    parts: tuple[int, ...]
    torsion_points: int = 0

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("a splitting type needs at least one part")
        if any(x < y for x, y in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing, got {self.parts}")
        if self.torsion_points < 0:
            raise ValueError("torsion_points must be nonnegative")

    @property
    def rank(self) -> int:
        return len(self.parts)

    @property
    def degree(self) -> int:
        return sum(self.parts) + self.torsion_points

    @property
    def is_locally_free(self) -> bool:
        return self.torsion_points == 0

    def __str__(self) -> str:
        s = "(" + ",".join(str(a) for a in self.parts) + ")"
        if self.torsion_points:
            s += f"+{self.torsion_points}pt"
        return s


@lru_cache(maxsize=None)
def _decreasing_tuples(r: int, total: int, hi: int | None, lo: int) -> tuple[tuple[int, ...], ...]:
    # weakly decreasing r-tuples in [lo, hi] summing to total, lexicographically ascending
    if r == 1:
        if total >= lo and (hi is None or total <= hi):
            return ((total,),)
        return ()
    first_min = -(-total // r)  # ceil: the largest part is at least the mean
    first_max = total - (r - 1) * lo
    if hi is not None:
        first_max = min(first_max, hi)
    out = []
    for a in range(first_min, first_max + 1):
        for tail in _decreasing_tuples(r - 1, total - a, a, lo):
            out.append((a,) + tail)
    return tuple(out)


def locally_free_types(r: int, deg: int, min_part: int = DEFAULT_MIN_PART) -> tuple[tuple[int, ...], ...]:
    """Raw part tuples of the rank-r degree-deg bundles with every part >= min_part."""
    if r < 1:
        raise HypothesisError(f"rank must be at least 1, got {r}")
    return _decreasing_tuples(r, deg, None, min_part)


def enumerate_splitting_types(r: int, deg: int, min_part: int = DEFAULT_MIN_PART) -> list[SplittingType]:
    """All types of rank r and degree deg in the window, ordered by (t, parts)."""
    out = []
    for t in range(0, deg - r * min_part + 1):
        out.extend(SplittingType(p, t) for p in locally_free_types(r, deg - t, min_part))
    return out


def ext1_locally_free(parts: tuple[int, ...]) -> int:
    total = 0
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            if a - b > 1:
                total += a - b - 1
    return total


@lru_cache(maxsize=None)
def _codim_table(r: int, deg: int, min_part: int) -> tuple[tuple[tuple[int, ...], ...], np.ndarray]:
    types = locally_free_types(r, deg, min_part)
    if not types:
        return types, np.zeros(0, dtype=np.int64)
    arr = np.asarray(types, dtype=np.int64)
    codims = np.zeros(len(types), dtype=np.int64)
    for i in range(r):
        for j in range(i + 1, r):
            codims += np.maximum(arr[:, i] - arr[:, j] - 1, 0)
    codims.setflags(write=False)
    return types, codims


def stratum_codim(s: SplittingType) -> int:
    return ext1_locally_free(s.parts) + s.torsion_points * (s.rank + 1)


def generic_type(r: int, d: int) -> tuple[int, ...]:
    """``(0^{r-d}, (-1)^d)``: the bundle of degree ``-d`` with balanced splitting."""
    return (0,) * (r - d) + (-1,) * d


def jump_type(r: int) -> tuple[int, ...]:
    """``(1, 0^{r-2}, -1)``, the codimension-one jump in degree 0."""
    return (1,) + (0,) * (r - 2) + (-1,)


@dataclass
class P1Report:
    rank: int
    d: int
    min_part: int
    passed: bool
    type_count: int
    codim_histogram: dict[int, int]
    low_codim: list[tuple[SplittingType, int]]
    offending: list[tuple[SplittingType, int, str]] = field(default_factory=list)

    @property
    def part(self) -> str:
        return "i" if self.d > 0 else "ii"


def verify_lemma_p1(r: int, d: int, min_part: int = DEFAULT_MIN_PART) -> P1Report:
    """Check the codimension pattern of strata in ``Coh_{P¹}(r, -d)`` over the window.

    For ``d > 0`` the generic type must have codimension 0 and every other
    type codimension >= 2. For ``d = 0`` the trivial bundle has codimension
    0, the type ``(1, 0^{r-2}, -1)`` exactly 1, and everything else >= 2.
    """
    if r < 2 or not 0 <= d < r:
        raise HypothesisError(f"need r >= 2 and 0 <= d < r, got r={r}, d={d}")
    generic = generic_type(r, d)
    jump = jump_type(r) if d == 0 else None
    # both the generic type for d > 0 and the jump type for d = 0 contain a -1
    if min_part > -1:
        raise WindowError(f"min_part={min_part} > -1 excludes the types the check needs")

    deg = -d
    histogram: dict[int, int] = {}
    low: list[tuple[SplittingType, int]] = []
    offending: list[tuple[SplittingType, int, str]] = []
    count = 0
    seen_generic = seen_jump = False
    for t in range(0, deg - r * min_part + 1):
        types, codims = _codim_table(r, deg - t, min_part)
        codims = codims + t * (r + 1)
        count += len(types)
        values, counts = np.unique(codims, return_counts=True)
        for v, c in zip(values.tolist(), counts.tolist()):
            histogram[v] = histogram.get(v, 0) + c
        flagged = set(np.flatnonzero(codims < 2).tolist())
        if t == 0:
            flagged.update(i for i, p in enumerate(types) if p == generic or p == jump)
        for i in sorted(flagged):
            parts, codim = types[i], int(codims[i])
            st = SplittingType(parts, t)
            low.append((st, codim))
            if t == 0 and parts == generic:
                seen_generic = True
                if codim != 0:
                    offending.append((st, codim, "generic type must have codim 0"))
            elif t == 0 and parts == jump:
                seen_jump = True
                if codim != 1:
                    offending.append((st, codim, "jump type must have codim exactly 1"))
            else:
                offending.append((st, codim, "non-generic type with codim < 2"))
    if not seen_generic or (jump is not None and not seen_jump):
        raise WindowError("enumeration window does not contain the generic type")
    return P1Report(
        rank=r,
        d=d,
        min_part=min_part,
        passed=not offending,
        type_count=count,
        codim_histogram=dict(sorted(histogram.items())),
        low_codim=low,
        offending=offending,
    )
