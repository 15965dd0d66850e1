"""Numeric trace of the induction that reduces prioritary sheaf data to F(g, e).

Each level normalizes ``d = -c1·E_last`` into ``[0, r)`` by twisting with a
multiple of the last exceptional class, then contracts it; the pushed
forward data is ``(r, α_*c1, c2 + d(d-1)/2)`` and the stack loses a
``d(r-d)``-dimensional Grassmannian fibre. On the geometrically ruled base
``d = -c1·f`` is normalized by twisting with ``σ`` and ``E`` splits as an
extension of ``B = π*L ⊗ Ω_{S/C}(σ)`` by ``A = π*K`` with

    deg K = k = χ(E) + (r-d)(g-1),    deg L = l = -χ(E) + c1·σ - (r-d)(g-1).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import AuditFailure, HypothesisError, NormalizationError, UnsupportedSurfaceError
from .invariants import (
    ChernData,
    chern_of_twist,
    direct_sum,
    discriminant,
    euler_char,
    euler_pairing,
    pullback_from_curve,
    stack_dim,
)
from .lattice import DivisorClass, RuledSurface, intersect, pushforward_class
from .polarization import theorem_condition


class StepKind(str, enum.Enum):
    TWIST_FIBER = "twist-fiber"
    TWIST_EXCEPTIONAL = "twist-exceptional"
    BLOWDOWN = "blowdown"
    BASE_CASE = "base-case"


class Direction(str, enum.Enum):
    FIBER = "fiber"
    EXCEPTIONAL_LAST = "exceptional-last"


@dataclass(frozen=True)
class ReductionStep:
    kind: StepKind
    surface: RuledSurface  # surface carrying ``before``
    twist_amount: int
    d: int
    fiber_dim: int
    before: ChernData
    after: ChernData

    @property
    def target_surface(self) -> RuledSurface:
        return self.surface.blow_down() if self.kind is StepKind.BLOWDOWN else self.surface


@dataclass(frozen=True)
class BaseCaseData:
    d: int
    K_rank: int
    K_deg: int
    L_rank: int
    L_deg: int
    ext_dim_B_to_A: int  # -χ(B, A)
    chi_A_B: int  # χ(A, B), identically zero
    A: ChernData
    B: ChernData  # rank 0 when d = 0


@dataclass(frozen=True)
class Audit:
    name: str
    step: int
    expected: int
    actual: int
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.expected == self.actual


@dataclass
class ReductionTrace:
    surface: RuledSurface
    start: ChernData
    steps: list[ReductionStep]
    base: BaseCaseData
    audits: list[Audit] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.audits)

    @property
    def final(self) -> ChernData:
        return self.steps[-1].after


@dataclass(frozen=True)
class ModuliDimensions:
    dim_stable: int
    m: int
    m_formula: int
    unirational: bool

    @property
    def consistent(self) -> bool:
        return self.m == self.m_formula


def normalize_twist(S: RuledSurface, c: ChernData, direction) -> tuple[int, ChernData]:
    """Twist so that ``d`` lands in ``[0, r)``; return ``(n, twisted data)``.

    ``fiber`` twists by ``nσ`` on a geometrically ruled surface (``d`` drops
    by ``rn``); ``exceptional-last`` twists by ``nE_last`` (``d`` grows by ``rn``).
    """
    direction = Direction(direction)
    r = c.rank
    if direction is Direction.FIBER:
        if not S.is_geometrically_ruled:
            raise NormalizationError("fiber normalization needs a geometrically ruled surface")
        d = -intersect(S, c.c1, S.fiber)
        n = d // r
        L = n * S.sigma
        d_new = d - r * n
    else:
        if S.blowups == 0:
            raise NormalizationError("exceptional normalization needs at least one blowup")
        E = S.exceptional(S.blowups)
        d = -intersect(S, c.c1, E)
        n = -(d // r)
        L = n * E
        d_new = d + r * n
    assert 0 <= d_new < r  # [0, r) has length r, so n is unique
    return n, chern_of_twist(S, c, L)


def split_degree(S: RuledSurface, c: ChernData, direction) -> int:
    """``d = -c1·f`` (fiber) or ``d = -c1·E_last`` (exceptional-last)."""
    if Direction(direction) is Direction.FIBER:
        return -intersect(S, c.c1, S.fiber)
    return -intersect(S, c.c1, S.exceptional(S.blowups))


def blowdown_step(S: RuledSurface, c: ChernData) -> tuple[RuledSurface, ChernData, int]:
    if S.blowups == 0:
        raise NormalizationError("blowdown needs at least one blowup")
    r = c.rank
    d = split_degree(S, c, Direction.EXCEPTIONAL_LAST)
    if not 0 <= d < r:
        raise NormalizationError(f"d = -c1·E = {d} is not in [0, {r}); normalize first")
    S1 = S.blow_down()
    pushed = ChernData(r, pushforward_class(S, c.c1), c.c2 + d * (d - 1) // 2)
    return S1, pushed, d * (r - d)


def omega_class(S: RuledSurface) -> DivisorClass:
    """Class of ``Ω_{S/C}(σ)``, i.e. ``K_S - π*K_C + σ = -σ - e·f``."""
    if not S.is_geometrically_ruled:
        raise UnsupportedSurfaceError("Ω_{S/C}(σ) is only modelled on F(g, e)")
    return -S.sigma - S.e_invariant * S.fiber


def base_case_data(S: RuledSurface, c: ChernData) -> BaseCaseData:
    if not S.is_geometrically_ruled:
        raise UnsupportedSurfaceError("base case needs a geometrically ruled surface")
    r, g = c.rank, S.genus
    d = split_degree(S, c, Direction.FIBER)
    if not 0 <= d < r:
        raise NormalizationError(f"d = -c1·f = {d} is not in [0, {r}); normalize first")
    chi = euler_char(S, c)
    k = chi + (r - d) * (g - 1)
    l = -chi + intersect(S, c.c1, S.sigma) - (r - d) * (g - 1)
    A = pullback_from_curve(S, r - d, k)
    # for d = 0, L is torsion of length l on C and π*L has data (0, l·f, 0)
    L = pullback_from_curve(S, d, l) if d > 0 else ChernData(0, l * S.fiber, 0)
    B = chern_of_twist(S, L, omega_class(S))
    return BaseCaseData(d, r - d, k, d, l, -euler_pairing(S, B, A), euler_pairing(S, A, B), A, B)


def run_reduction(S: RuledSurface, c: ChernData) -> ReductionTrace:
    """Reduce ``c`` on ``S`` to base-case data on ``F(g, e)``, with audits attached."""
    if c.rank < 2:
        raise HypothesisError(f"the reduction needs rank r >= 2, got {c.rank}")
    S.check(c.c1)
    steps: list[ReductionStep] = []
    cur_S, cur = S, c
    while cur_S.blowups > 0:
        n, twisted = normalize_twist(cur_S, cur, Direction.EXCEPTIONAL_LAST)
        d = split_degree(cur_S, twisted, Direction.EXCEPTIONAL_LAST)
        steps.append(ReductionStep(StepKind.TWIST_EXCEPTIONAL, cur_S, n, d, 0, cur, twisted))
        S1, pushed, fdim = blowdown_step(cur_S, twisted)
        steps.append(ReductionStep(StepKind.BLOWDOWN, cur_S, 0, d, fdim, twisted, pushed))
        cur_S, cur = S1, pushed
    n, twisted = normalize_twist(cur_S, cur, Direction.FIBER)
    d = split_degree(cur_S, twisted, Direction.FIBER)
    steps.append(ReductionStep(StepKind.TWIST_FIBER, cur_S, n, d, 0, cur, twisted))
    base = base_case_data(cur_S, twisted)
    steps.append(ReductionStep(StepKind.BASE_CASE, cur_S, 0, d, 0, twisted, twisted))
    trace = ReductionTrace(S, c, steps, base)
    trace.audits = audit_dimensions(trace, strict=False)
    return trace


def audit_dimensions(trace: ReductionTrace, strict: bool = True) -> list[Audit]:
    """Recheck every step of ``trace`` with independently computed stack dimensions.

    * blowdown: ``dim(S, c) = dim(S_1, c_1) + d(r-d)``;
    * twists: discriminant and stack dimension unchanged;
    * base case: ``dim = (r-d)²(g-1) + d²(g-1) - χ(B, A)``, plus ``χ(A, B) = 0``
      and ``A ⊕ B`` reproducing the normalized data.

    With ``strict`` a failing audit raises :class:`AuditFailure`.
    """
    audits: list[Audit] = []
    for i, step in enumerate(trace.steps):
        S, r = step.surface, step.before.rank
        if step.kind is StepKind.BLOWDOWN:
            lhs = stack_dim(S, step.before)
            rhs = stack_dim(step.target_surface, step.after) + step.d * (r - step.d)
            audits.append(Audit("blowdown", i, lhs, rhs, f"{stack_dim(step.target_surface, step.after)} + {step.fiber_dim}"))
            audits.append(Audit("blowdown-c2-shift", i, step.before.c2 + step.d * (step.d - 1) // 2, step.after.c2))
        elif step.kind in (StepKind.TWIST_FIBER, StepKind.TWIST_EXCEPTIONAL):
            audits.append(Audit("twist-discriminant", i, discriminant(S, step.before), discriminant(S, step.after)))
            audits.append(Audit("twist-stack-dim", i, stack_dim(S, step.before), stack_dim(S, step.after)))
        elif step.kind is StepKind.BASE_CASE:
            base, g = trace.base, S.genus
            d = base.d
            a_part = (r - d) ** 2 * (g - 1)
            b_part = d * d * (g - 1)
            chi_BA = -base.ext_dim_B_to_A
            audits.append(
                Audit(
                    "base-case",
                    i,
                    stack_dim(S, step.before),
                    a_part + b_part - chi_BA,
                    f"{a_part} + {b_part} + {-chi_BA}",
                )
            )
            audits.append(Audit("chi(A,B)=0", i, 0, base.chi_A_B))
            total = direct_sum(S, base.A, base.B)
            audits.append(Audit("A+B-rank", i, step.before.rank, total.rank))
            audits.append(Audit("A+B-c2", i, step.before.c2, total.c2))
            for name, want, got in zip(("sigma", "f"), step.before.c1, total.c1):
                audits.append(Audit(f"A+B-c1.{name}", i, want, got))
    if strict:
        failures = [a for a in audits if not a.passed]
        if failures:
            raise AuditFailure(failures)
    return audits


def moduli_dims(S: RuledSurface, c: ChernData) -> ModuliDimensions:
    """Dimension of ``M^s`` and the projective-space parameter ``m``.

    ``m`` is computed twice: as ``dim M^s - 2g`` and by the closed form
    ``2rc2 - (r-1)c1² + (r²-2)g - r² + 1``. The closed form is written with
    ``c1²``; a bare ``c1`` there would not be a number.
    """
    if c.rank < 2:
        raise HypothesisError(f"need rank r >= 2, got {c.rank}")
    r, g = c.rank, S.genus
    dim = stack_dim(S, c) + 1
    m_formula = 2 * r * c.c2 - (r - 1) * intersect(S, c.c1, c.c1) + (r * r - 2) * g - r * r + 1
    return ModuliDimensions(dim, dim - 2 * g, m_formula, g == 0)


def semistable_prioritary_gap(S: RuledSurface, H: DivisorClass) -> int:
    """``H·(K_S + f)``; negative means every H-semistable sheaf is prioritary."""
    return theorem_condition(S, H)
