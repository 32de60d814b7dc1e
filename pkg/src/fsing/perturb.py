"""m-adic perturbation sweeps: evaluate a property on ``I + (x + delta(N))``.

A sweep over a one-parameter family is evidence about stability, not a
proof of it; reports say so in their summary.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .config import Config, budget_scope, current_config, using_config
from .errors import BudgetExceeded, InputError
from .frobenius import compatibly_fpure_along, fedder_fpure, sfr_certificate, sharply_fpure_pair
from .groebner import Ideal, is_smooth
from .numerics import fsig_estimate, hk_estimate, rational_json, rsig_estimate
from .polyring import Polynomial
from .verdict import Verdict

EVIDENCE_NOTE = "one-parameter family: evidence, not proof, of stability"


@dataclass(frozen=True)
class PerturbationFamily:
    """``delta(N) = coefficient * direction^N`` for ``N`` in ``exponents``.

    With ``deltas`` set the family is an explicit list of perturbations,
    labelled 1, 2, ... in order, and ``direction``/``coefficient`` are unused.
    """

    direction: Polynomial | None
    coefficient: Polynomial | None
    exponents: tuple[int, ...] = ()
    deltas: tuple[Polynomial, ...] | None = None

    def __post_init__(self):
        if self.deltas is None:
            g = self.direction
            if g is None or not g or g.constant_term():
                raise InputError("family direction must be a nonzero element of the maximal ideal")
            if any(N < 1 for N in self.exponents):
                raise InputError("family exponents must be positive")

    @classmethod
    def explicit(cls, deltas) -> PerturbationFamily:
        return cls(None, None, (), tuple(deltas))

    def describe(self) -> str:
        if self.deltas is not None:
            return "[" + "; ".join(str(d) for d in self.deltas) + "]"
        c = self.coefficient
        prefix = "" if c is None or c == c.ring.one() else f"({c})*"
        return f"{prefix}({self.direction})^N"

    def members(self) -> list[tuple[int, Polynomial]]:
        if self.deltas is not None:
            return list(enumerate(self.deltas, start=1))
        g = self.direction
        c = self.coefficient if self.coefficient is not None else g.ring.one()
        return [(N, c.to_ring(g.ring) * g**N) for N in self.exponents]


@dataclass(frozen=True)
class Prop:
    """A property to sweep: ``fpure``, ``compat``, ``sharp``, ``sfr`` or ``smooth``."""

    name: str
    along: Ideal | None = None  # compat: extra ideal joined to (x + delta)
    elem: Polynomial | None = None  # sharp: x'; defaults to x + delta on S/I
    t: Fraction | None = None
    c: Polynomial | None = None
    e_max: int | None = None

    NAMES = ("fpure", "compat", "sharp", "sfr", "smooth")

    def __post_init__(self):
        if self.name not in self.NAMES:
            raise InputError(f"unknown property {self.name!r}")
        if self.name == "sharp" and self.t is None:
            raise InputError("sharp needs t")
        if self.name == "sfr" and self.c is None:
            raise InputError("sfr needs c")

    def params(self) -> dict:
        out = {}
        if self.along is not None:
            out["along"] = [str(g) for g in self.along.canonical_gens()]
        if self.elem is not None:
            out["elem"] = str(self.elem)
        if self.t is not None:
            out["t"] = str(self.t)
        if self.c is not None:
            out["c"] = str(self.c)
        if self.e_max is not None:
            out["e_max"] = self.e_max
        return out


def evaluate_property(I: Ideal, y: Polynomial, prop: Prop) -> Verdict:
    """Run ``prop`` on the quotient determined by ``I`` and the element ``y``."""
    if prop.name == "fpure":
        return fedder_fpure(I + y)
    if prop.name == "compat":
        a = Ideal(I.ring, [y]) if prop.along is None else prop.along + y
        return compatibly_fpure_along(I, a)
    if prop.name == "sharp":
        if prop.elem is None:
            return sharply_fpure_pair(I, y, prop.t, prop.e_max)
        return sharply_fpure_pair(I + y, prop.elem, prop.t, prop.e_max)
    if prop.name == "sfr":
        return sfr_certificate(I + y, prop.c, prop.e_max)
    return is_smooth(I + y)


@dataclass
class SweepReport:
    ideal: list[str]
    x: str
    family: str
    prop: str
    params: dict
    rows: list[dict] = field(default_factory=list)
    stability_summary: str = ""

    def to_json(self) -> dict:
        return {
            "ideal": self.ideal,
            "x": self.x,
            "family": self.family,
            "property": self.prop,
            "params": self.params,
            "rows": self.rows,
            "stability_summary": self.stability_summary,
            "note": EVIDENCE_NOTE,
        }


def _e_used(v: Verdict):
    if v.certificate and "e" in v.certificate:
        return v.certificate["e"]
    return v.log[-1]["e"] if v.log and "e" in v.log[-1] else None


def _verdict_row(args):
    I, y, prop, cfg, label = args
    with using_config(cfg), budget_scope():
        t0 = time.perf_counter()
        try:
            v = evaluate_property(I, y, prop)
        except BudgetExceeded as exc:
            return {"N": label, "status": "BUDGET_EXCEEDED", "error": str(exc),
                    "ms": round((time.perf_counter() - t0) * 1000, 3)}
        ms = round((time.perf_counter() - t0) * 1000, 3)
    return {"N": label, "status": v.status.value, "certificate": v.certificate, "e_used": _e_used(v), "ms": ms}


def _run_rows(fn, jobs, cfg: Config):
    if cfg.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            return list(pool.map(fn, jobs))  # map preserves job order
    return [fn(j) for j in jobs]


def _check_x(I: Ideal, x: Polynomial) -> Polynomial:
    x = x.to_ring(I.ring)
    if x.constant_term():
        raise InputError("x must lie in the maximal ideal")
    return x


def _members(I, x, fam):
    rows = [(0, x, None)]
    for N, d in fam.members():
        d = d.to_ring(I.ring)
        rows.append((N, x + d, d))
    return rows


def _degree_note(N, d, fam):
    if d is None:
        return {}
    md = d.min_degree() if d else None
    note = {"delta": str(d), "delta_order": md}
    if fam.deltas is None:
        note["delta_in_m^N"] = md is None or md >= N
    return note


def perturb_sweep(I: Ideal, x: Polynomial, fam: PerturbationFamily, prop: Prop) -> SweepReport:
    """One row per family member plus the baseline ``N = 0`` (delta = 0) row."""
    x = _check_x(I, x)
    cfg = current_config()
    members = _members(I, x, fam)
    rows = _run_rows(_verdict_row, [(I, y, prop, cfg, N) for N, y, _ in members], cfg)
    for row, (N, _, d) in zip(rows, members):
        row.update(_degree_note(N, d, fam))
    base = rows[0]["status"]
    flip = next((r["N"] for r in rows[1:] if r["status"] != base), None)
    summary = "stable through range" if flip is None else f"verdict differs from baseline first at N={flip}"
    return SweepReport([str(g) for g in I.canonical_gens()], str(x), fam.describe(), prop.name,
                       prop.params(), rows, summary)


@dataclass(frozen=True)
class Invariant:
    """``hk`` (with ``J``), ``fsig`` or ``rsig`` (with ``sop`` and ``budget``)."""

    name: str
    J: Ideal | None = None
    sop: tuple[Polynomial, ...] = ()
    budget: int | None = None

    def __post_init__(self):
        if self.name not in ("hk", "fsig", "rsig"):
            raise InputError(f"unknown invariant {self.name!r}")
        if self.name == "hk" and self.J is None:
            raise InputError("hk needs J")
        if self.name == "rsig" and not self.sop:
            raise InputError("rsig needs a system of parameters")

    def params(self) -> dict:
        out = {}
        if self.J is not None:
            out["J"] = [str(g) for g in self.J.canonical_gens()]
        if self.sop:
            out["sop"] = [str(s) for s in self.sop]
        if self.budget is not None:
            out["budget"] = self.budget
        return out


def evaluate_invariant(K: Ideal, inv: Invariant, e: int):
    if inv.name == "hk":
        est = hk_estimate(K, inv.J, e)
        return est.value, {"length": est.length, "d": est.d}
    if inv.name == "fsig":
        est = fsig_estimate(K, e)
        return est.value, {"length": est.length, "d": est.d}
    est = rsig_estimate(K, list(inv.sop), e, inv.budget)
    return est.value, {"base_length": est.base_length, "d": est.d, "exhaustive": est.exhaustive}


def _value_row(args):
    K, inv, e, cfg, label = args
    with using_config(cfg), budget_scope():
        t0 = time.perf_counter()
        try:
            value, extra = evaluate_invariant(K, inv, e)
        except BudgetExceeded as exc:
            return {"N": label, "status": "BUDGET_EXCEEDED", "error": str(exc),
                    "ms": round((time.perf_counter() - t0) * 1000, 3)}
        ms = round((time.perf_counter() - t0) * 1000, 3)
    return {"N": label, "value": value, **extra, "e_used": e, "ms": ms}


def continuity_table(I: Ideal, x: Polynomial, fam: PerturbationFamily, e: int, inv: Invariant) -> SweepReport:
    """Exact invariant of ``S/(I + (x + delta))`` per row, with ``|value - value at delta=0|``."""
    x = _check_x(I, x)
    cfg = current_config()
    members = _members(I, x, fam)
    rows = _run_rows(_value_row, [(I + y, inv, e, cfg, N) for N, y, _ in members], cfg)
    base = rows[0].get("value")
    flips = []
    for row, (N, _, d) in zip(rows, members):
        row.update(_degree_note(N, d, fam))
        if "value" in row:
            v = row["value"]
            delta = None if base is None else abs(v - base)
            row["value"] = rational_json(v)
            if delta is not None:
                row["delta_abs"] = rational_json(delta)
                row["delta_zero"] = delta == 0
                if delta:
                    flips.append(N)
    summary = "stable through range" if not flips else f"value differs from baseline first at N={flips[0]}"
    params = {"e": e, **inv.params()}
    return SweepReport([str(g) for g in I.canonical_gens()], str(x), fam.describe(), inv.name,
                       params, rows, summary)
