"""Run the full pipeline on a configuration and render the results.

Two formats are produced. ``text`` is for people. ``json-lines`` writes one
JSON object per line, each with a ``record`` key naming its type:

=============  ==============================================================
record         keys
=============  ==============================================================
surface        genus, e, blowups, picard_number, canonical_class, K_squared,
               sheaf, chi, discriminant, stack_dim
polarization   source, class, verdict, checks, note
hypothesis     value, satisfied
step           index, kind, n, d, fiber_dim, picard_number, before, after
base_case      d, K_rank, k, L_rank, l, ext_dim_B_to_A, chi_A_B
audit          name, step, expected, actual, detail, pass
moduli         dim_stable, m, m_formula, consistent, unirational, caveat
strata         rank, d, min_part, type_count, codim_histogram, low_codim,
               offending, pass
adjunction     name, expected, actual, pass
summary        exit_code
=============  ==============================================================

Chern data inside records is ``{"rank": r, "c1": [...], "c2": c2}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .config import AUTO, Config
from .invariants import ChernData, discriminant, euler_char, stack_dim
from .lattice import DivisorClass, RuledSurface, canonical_class, intersect
from .polarization import (
    Verdict,
    construct_good_polarization,
    is_ample,
    necessary_checks,
    theorem_condition,
)
from .reduction import ModuliDimensions, ReductionTrace, moduli_dims, run_reduction
from .strata import P1Report

EXIT_OK = 0
EXIT_HYPOTHESIS = 2
EXIT_AUDIT = 3
EXIT_INPUT = 4

FORMATS = ("text", "json-lines")

M_CAVEAT = "closed form for m evaluated with c1·c1 in the (r-1) term; printed as m_formula"


@dataclass
class PipelineResult:
    config: Config
    polarization: DivisorClass
    polarization_source: str
    verdict: Verdict
    hypothesis: int
    trace: ReductionTrace | None
    moduli: ModuliDimensions | None

    @property
    def hypothesis_ok(self) -> bool:
        return self.hypothesis < 0 and self.verdict is not Verdict.NOT_AMPLE

    @property
    def exit_code(self) -> int:
        if self.trace is not None and not self.trace.passed:
            return EXIT_AUDIT
        if self.moduli is not None and not self.moduli.consistent:
            return EXIT_AUDIT
        if not self.hypothesis_ok:
            return EXIT_HYPOTHESIS
        return EXIT_OK


def run_pipeline(cfg: Config, reduce: bool = True) -> PipelineResult:
    S = cfg.surface
    if isinstance(cfg.polarization, str) and cfg.polarization == AUTO:
        H, source = construct_good_polarization(S), "auto"
    else:
        H, source = cfg.polarization, "given"
    trace = moduli = None
    if reduce:
        trace = run_reduction(S, cfg.sheaf)
        moduli = moduli_dims(S, cfg.sheaf)
    return PipelineResult(cfg, H, source, is_ample(S, H), theorem_condition(S, H), trace, moduli)


def adjunction_checks(S: RuledSurface) -> list[tuple[str, int, int]]:
    K = canonical_class(S)
    rows = [
        ("K.f", -2, intersect(S, K, S.fiber)),
        ("f.f", 0, intersect(S, S.fiber, S.fiber)),
        ("K^2", 8 * (1 - S.genus) - S.blowups, intersect(S, K, K)),
    ]
    for i in range(1, S.blowups + 1):
        E = S.exceptional(i)
        rows.append((f"K.E_{i}", -1, intersect(S, K, E)))
        rows.append((f"E_{i}^2", -1, intersect(S, E, E)))
    return rows


def _chern_json(c: ChernData) -> dict:
    return {"rank": c.rank, "c1": list(c.c1), "c2": c.c2}


def _polarization_note(S: RuledSurface) -> str:
    if S.genus == 0 and S.is_geometrically_ruled:
        return "-K_S - f = 2σ + (1+e)f is effective here, so every ample class satisfies the condition"
    return ""


def _hypothesis_line(value: int) -> str:
    if value < 0:
        return f"H·(K_S+f) = {value} < 0: hypothesis satisfied"
    return f"H·(K_S+f) = {value} ≥ 0: hypothesis NOT satisfied"


# ---- record builders -------------------------------------------------------


def surface_records(cfg: Config) -> list[dict]:
    S, c = cfg.surface, cfg.sheaf
    K = canonical_class(S)
    recs = [
        {
            "record": "surface",
            "genus": S.genus,
            "e": S.e_invariant,
            "blowups": S.blowups,
            "picard_number": S.picard_number,
            "canonical_class": list(K),
            "K_squared": intersect(S, K, K),
            "sheaf": _chern_json(c),
            "chi": euler_char(S, c),
            "discriminant": discriminant(S, c),
            "stack_dim": stack_dim(S, c),
        }
    ]
    for name, want, got in adjunction_checks(S):
        recs.append({"record": "adjunction", "name": name, "expected": want, "actual": got, "pass": want == got})
    return recs


def polarization_records(res: PipelineResult) -> list[dict]:
    S = res.config.surface
    checks = [] if S.is_geometrically_ruled else necessary_checks(S, res.polarization)
    return [
        {
            "record": "polarization",
            "source": res.polarization_source,
            "class": list(res.polarization),
            "verdict": res.verdict.value,
            "checks": [{"name": c.name, "value": c.value, "pass": c.passed} for c in checks],
            "note": _polarization_note(S),
        },
        {"record": "hypothesis", "value": res.hypothesis, "satisfied": res.hypothesis_ok},
    ]


def trace_records(trace: ReductionTrace) -> list[dict]:
    recs = []
    for i, st in enumerate(trace.steps):
        recs.append(
            {
                "record": "step",
                "index": i,
                "kind": st.kind.value,
                "n": st.twist_amount,
                "d": st.d,
                "fiber_dim": st.fiber_dim,
                "picard_number": st.surface.picard_number,
                "before": _chern_json(st.before),
                "after": _chern_json(st.after),
            }
        )
    b = trace.base
    recs.append(
        {
            "record": "base_case",
            "d": b.d,
            "K_rank": b.K_rank,
            "k": b.K_deg,
            "L_rank": b.L_rank,
            "l": b.L_deg,
            "ext_dim_B_to_A": b.ext_dim_B_to_A,
            "chi_A_B": b.chi_A_B,
        }
    )
    for a in trace.audits:
        recs.append(
            {
                "record": "audit",
                "name": a.name,
                "step": a.step,
                "expected": a.expected,
                "actual": a.actual,
                "detail": a.detail,
                "pass": a.passed,
            }
        )
    return recs


def moduli_records(m: ModuliDimensions) -> list[dict]:
    return [
        {
            "record": "moduli",
            "dim_stable": m.dim_stable,
            "m": m.m,
            "m_formula": m.m_formula,
            "consistent": m.consistent,
            "unirational": m.unirational,
            "caveat": M_CAVEAT,
        }
    ]


def strata_records(rep: P1Report) -> list[dict]:
    return [
        {
            "record": "strata",
            "rank": rep.rank,
            "d": rep.d,
            "min_part": rep.min_part,
            "type_count": rep.type_count,
            "codim_histogram": {str(k): v for k, v in rep.codim_histogram.items()},
            "low_codim": [
                {"parts": list(s.parts), "torsion_points": s.torsion_points, "codim": c}
                for s, c in rep.low_codim
            ],
            "offending": [
                {"parts": list(s.parts), "torsion_points": s.torsion_points, "codim": c, "reason": why}
                for s, c, why in rep.offending
            ],
            "pass": rep.passed,
        }
    ]


def to_json_lines(records: list[dict]) -> str:
    return "".join(json.dumps(r, ensure_ascii=False) + "\n" for r in records)


# ---- text rendering --------------------------------------------------------


def _surface_text(cfg: Config) -> list[str]:
    S, c = cfg.surface, cfg.sheaf
    K = canonical_class(S)
    out = [
        "== Surface ==",
        f"{S}  (Picard number {S.picard_number})",
        f"K_S = {K}   K_S^2 = {intersect(S, K, K)}",
    ]
    checks = adjunction_checks(S)
    bad = [f"{n}: {w} != {g}" for n, w, g in checks if w != g]
    out.append("adjunction checks: " + ("PASS" if not bad else "FAIL " + "; ".join(bad)))
    out.append(
        f"sheaf {c}: chi = {euler_char(S, c)}, discriminant = {discriminant(S, c)}, "
        f"stack dim = {stack_dim(S, c)}"
    )
    return out


def _polarization_text(res: PipelineResult) -> list[str]:
    S = res.config.surface
    out = ["", "== Polarization ==", f"H = {res.polarization}  ({res.polarization_source})", f"ampleness: {res.verdict.value}"]
    if not S.is_geometrically_ruled and res.verdict is not Verdict.AMPLE:
        for chk in necessary_checks(S, res.polarization):
            out.append(f"  {chk.name} = {chk.value} {'ok' if chk.passed else 'FAIL'}")
    note = _polarization_note(S)
    if note:
        out.append(f"note: {note}")
    out += ["", "== Hypothesis H·(K_S+f) ==", _hypothesis_line(res.hypothesis)]
    if res.verdict is Verdict.NOT_AMPLE:
        out.append("H is not ample: hypothesis NOT satisfied")
    return out


def _trace_text(trace: ReductionTrace) -> list[str]:
    out = ["", "== Reduction Trace =="]
    for i, st in enumerate(trace.steps):
        out.append(
            f"[{i}] {st.kind.value:<17} n={st.twist_amount:<3} d={st.d:<2} "
            f"{st.before} -> {st.after}  fiber_dim={st.fiber_dim}"
        )
    b = trace.base
    out += [
        "",
        "== Base Case ==",
        f"d={b.d} k={b.K_deg} l={b.L_deg}",
        f"K: rank {b.K_rank} degree {b.K_deg}; L: rank {b.L_rank} degree {b.L_deg}",
        f"-chi(B,A) = {b.ext_dim_B_to_A}, chi(A,B) = {b.chi_A_B}",
        "",
        "== Dimension Audits ==",
    ]
    for a in trace.audits:
        line = f"[{a.step}] {a.name}: {a.expected} = {a.actual} {'PASS' if a.passed else 'FAIL'}"
        if a.detail:
            line += f"  ({a.detail})"
        out.append(line)
    return out


def _moduli_text(m: ModuliDimensions) -> list[str]:
    out = [
        "",
        "== Moduli ==",
        f"dim M^s = {m.dim_stable}",
        f"m = {m.m}  (closed form: {m.m_formula}, {'agree' if m.consistent else 'DISAGREE'})",
        f"unirational (g = 0, if non-empty): {'yes' if m.unirational else 'no'}",
        f"caveat: {M_CAVEAT}",
    ]
    return out


def strata_text(rep: P1Report) -> str:
    which = "generic type" if rep.d > 0 else "codim-1 jump"
    lines = [f"== P1 strata: rank {rep.rank}, degree {-rep.d}, min part {rep.min_part} =="]
    for s, c in rep.low_codim:
        lines.append(f"{s}: codim {c}")
    others = {k: v for k, v in rep.codim_histogram.items() if k >= 2}
    n_others = sum(others.values()) - sum(1 for _, c in rep.low_codim if c >= 2)
    if others:
        lines.append(f"{n_others} other types, all codim >= {min(others)}")
    lines.append(f"{rep.type_count} types enumerated")
    for s, c, why in rep.offending:
        lines.append(f"OFFENDING {s}: codim {c} ({why})")
    lines.append(f"P1 strata (d={rep.d}, {which}): {'PASS' if rep.passed else 'FAIL'}")
    return "\n".join(lines) + "\n"


SECTIONS = ("surface", "polarization", "reduction", "moduli")


def render_report(res: PipelineResult, fmt: str = "text", sections=SECTIONS, exit_code: int | None = None) -> str:
    """Render the chosen sections; ``exit_code`` overrides the full-pipeline code in the footer."""
    code = res.exit_code if exit_code is None else exit_code
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
    if fmt == "json-lines":
        recs: list[dict] = []
        if "surface" in sections:
            recs += surface_records(res.config)
        if "polarization" in sections:
            recs += polarization_records(res)
        if "reduction" in sections and res.trace is not None:
            recs += trace_records(res.trace)
        if "moduli" in sections and res.moduli is not None:
            recs += moduli_records(res.moduli)
        recs.append({"record": "summary", "exit_code": code})
        return to_json_lines(recs)
    lines: list[str] = []
    if "surface" in sections:
        lines += _surface_text(res.config)
    if "polarization" in sections:
        lines += _polarization_text(res)
    if "reduction" in sections and res.trace is not None:
        lines += _trace_text(res.trace)
    if "moduli" in sections and res.moduli is not None:
        lines += _moduli_text(res.moduli)
    lines += ["", f"exit code {code}"]
    return "\n".join(lines).lstrip("\n") + "\n"
