"""Exit criteria for the package, one test per criterion.

Every check is exact; runtime budgets are measured wall-clock with cold caches.
"""

import random
import time
from pathlib import Path

from oracles import chi_line_bundle
from ruledsheaves import (
    ChernData,
    blow_up,
    construct_good_polarization,
    euler_char,
    euler_pairing,
    intersect,
    make_geometrically_ruled,
    moduli_dims,
    pullback_class,
    run_reduction,
    stack_dim,
    theorem_condition,
    verify_lemma_p1,
)
from ruledsheaves.cli import main
from ruledsheaves.lattice import RuledSurface
from ruledsheaves.reduction import StepKind
from ruledsheaves.strata import _codim_table, _decreasing_tuples, generic_type, jump_type

HERE = Path(__file__).parent
SEED = 20261019


def _random_instances(count=500, seed=SEED):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        S = RuledSurface(rng.randint(0, 3), rng.randint(0, 4), rng.randint(0, 5))
        c1 = S.divisor(*(rng.randint(-8, 8) for _ in range(S.picard_number)))
        out.append((S, ChernData(rng.randint(2, 6), c1, rng.randint(-40, 40))))
    return out


def test_c1_p1_strata(criterion, capsys):
    _decreasing_tuples.cache_clear()
    _codim_table.cache_clear()
    start = time.perf_counter()
    problems = []
    for r in range(2, 7):
        for d in range(r):
            rep = verify_lemma_p1(r, d, -10)
            codims = {s.parts: c for s, c in rep.low_codim if s.torsion_points == 0}
            if codims.get(generic_type(r, d)) != 0:
                problems.append((r, d, "generic"))
            if d == 0 and codims.get(jump_type(r)) != 1:
                problems.append((r, d, "jump"))
            special = {generic_type(r, d), jump_type(r) if d == 0 else None}
            if any(c < 2 for s, c in rep.low_codim if s.torsion_points or s.parts not in special):
                problems.append((r, d, "low codim"))
            if not rep.passed:
                problems.append((r, d, rep.offending))
    elapsed = time.perf_counter() - start
    codes = [main(["strata", "--rank", str(r), "--d", str(d), "--min-part", "-10"]) for r in range(2, 7) for d in range(r)]
    capsys.readouterr()
    ok = not problems and elapsed < 1.0 and set(codes) == {0}
    criterion("1 P1 strata r<=6, min_part=-10", ok, f"{elapsed:.3f}s (< 1 s) problems={problems}")
    assert ok


def test_c2_polarization_recursion(criterion):
    start = time.perf_counter()
    bad = []
    for g in range(4):
        for e in range(5):
            S = make_geometrically_ruled(g, e)
            H = construct_good_polarization(S)
            if theorem_condition(S, H) >= 0:
                bad.append((g, e, 0))
            for n in range(1, 6):
                big = blow_up(S)
                H_big = construct_good_polarization(big)
                value = theorem_condition(big, H_big)
                if H_big != 2 * pullback_class(H) - big.exceptional(n):
                    bad.append((g, e, n, "shape"))
                if value != 2 * theorem_condition(S, H) + 1 or value >= 0:
                    bad.append((g, e, n, value))
                S, H = big, H_big
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    criterion("2 good polarization g<=3 e<=4 n<=5", ok, f"{elapsed:.3f}s (< 1 s) bad={bad}")
    assert ok


def test_c3_geometrically_ruled_formula(criterion):
    bad = []
    for g in range(6):
        for e in range(6):
            S = make_geometrically_ruled(g, e)
            for b in range(-10, 11):
                if theorem_condition(S, S.divisor(1, b)) != 2 * g - 1 + e - 2 * b:
                    bad.append((g, e, b))
    criterion("3 H.(K+f) = 2g-1+e-2b, g,e<=5 |b|<=10", not bad, f"{6 * 6 * 21} cases")
    assert not bad


def test_c4_riemann_roch_oracle(criterion):
    start = time.perf_counter()
    bad = []
    for e in range(4):
        S = make_geometrically_ruled(0, e)
        K = (-2, -2 - e)
        for a in range(-6, 7):
            for b in range(-6, 7):
                got = euler_char(S, ChernData(1, S.divisor(a, b), 0))
                if a >= 0:
                    want = sum(b - i * e + 1 for i in range(a + 1))
                else:
                    # Serre-dual class K - D; for a = -1 it is again a = -1 and χ = 0
                    want = chi_line_bundle(0, e, K[0] - a, K[1] - b)
                if got != want:
                    bad.append((e, a, b, got, want))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 1.0
    criterion("4 Riemann-Roch vs pushforward oracle", ok, f"{elapsed:.3f}s (< 1 s) bad={bad[:3]}")
    assert ok


def test_c5_reduction_audits(criterion):
    start = time.perf_counter()
    failures, chi_ab, blowdowns = [], [], 0
    for S, c in _random_instances():
        t = run_reduction(S, c)
        failures += [(S, c, a) for a in t.audits if not a.passed]
        base_surface = t.steps[-1].surface
        if euler_pairing(base_surface, t.base.A, t.base.B) != 0:
            chi_ab.append((S, c))
        for st in t.steps:
            if st.kind is StepKind.BLOWDOWN:
                blowdowns += 1
                r = st.before.rank
                if stack_dim(st.surface, st.before) != stack_dim(st.target_surface, st.after) + st.d * (r - st.d):
                    failures.append((S, c, "blowdown identity"))
    elapsed = time.perf_counter() - start
    ok = not failures and not chi_ab and elapsed < 5.0
    criterion("5 reduction audits on 500 random instances", ok, f"{elapsed:.3f}s (< 5 s), {blowdowns} blowdowns, failures={failures[:2]} chi(A,B)!=0: {len(chi_ab)}")
    assert ok


def test_c6_m_formula(criterion):
    bad = []
    for S, c in _random_instances():
        r, g = c.rank, S.genus
        closed = 2 * r * c.c2 - (r - 1) * intersect(S, c.c1, c.c1) + (r * r - 2) * g - r * r + 1
        m = moduli_dims(S, c)
        if closed != stack_dim(S, c) + 1 - 2 * g or m.m != closed or m.m_formula != closed:
            bad.append((S, c))
    criterion("6 m closed form = stack_dim + 1 - 2g (500 instances)", not bad, f"bad={bad[:2]}")
    assert not bad


def test_c7_worked_fixture(criterion, capsys):
    S = make_geometrically_ruled(0, 0)
    c = ChernData(2, -S.sigma, 0)
    t = run_reduction(S, c)
    base_audit = [a for a in t.audits if a.name == "base-case"][0]
    code = main(["report", str(HERE / "fixtures" / "f00_minus_sigma.cfg"), "--format", "text"])
    out = capsys.readouterr().out
    golden = (HERE / "golden" / "f00_minus_sigma.txt").read_text(encoding="utf-8")
    ok = (
        (t.base.d, t.base.K_deg, t.base.L_deg) == (1, 0, 0)
        and stack_dim(S, c) == -4
        and (base_audit.expected, base_audit.actual, base_audit.detail) == (-4, -4, "-1 + -1 + -2")
        and t.passed
        and code == 0
        and out == golden
    )
    criterion("7 F(0,0) (2,-σ,0) golden report", ok, f"d,k,l={t.base.d},{t.base.K_deg},{t.base.L_deg} audit {base_audit.expected} = {base_audit.detail} exit {code}")
    assert ok
