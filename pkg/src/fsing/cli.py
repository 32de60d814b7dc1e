"""``fsing`` command-line front end.

Exit codes: 0 TRUE (or a successful numeric/sweep command), 1 FALSE,
2 UNDETERMINED, 3 budget exceeded, 64 usage or input error, 65 a
mathematical precondition failed (e.g. ideal not inside the maximal ideal).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import os
import sys
import tempfile
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .config import Config, budget_scope, using_config
from .errors import BudgetExceeded, FsingError, InputError
from .frobenius import compatibly_fpure_along, fedder_fpure, sfr_certificate, sharply_fpure_pair
from .groebner import is_smooth
from .inputfile import InputFile, load_input
from .numerics import csig_estimate, fsig_estimate, hk_estimate, rational_json, rsig_estimate, sdim_rf_estimate
from .perturb import Invariant, PerturbationFamily, Prop, continuity_table, perturb_sweep

log = logging.getLogger("fsing")

EXIT = {"TRUE": 0, "FALSE": 1, "UNDETERMINED": 2}
EXIT_BUDGET, EXIT_USAGE, EXIT_MATH = 3, 64, 65

VERDICT_COMMANDS = ("fpure", "compat", "sharp", "sfr", "smooth")


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- argument helpers ------------------------------------------------------


def parse_nrange(text: str) -> tuple[int, ...]:
    """``A..B`` (inclusive) or a comma list; ``0`` is the baseline row and is dropped."""
    try:
        if ".." in text:
            a, b = (int(s) for s in text.split("..", 1))
            if b < a:
                raise UsageError(f"empty range {text!r}")
            ns = range(a, b + 1)
        else:
            ns = [int(s) for s in text.split(",")]
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if any(n < 0 for n in ns):
        raise UsageError("exponents must be nonnegative")
    return tuple(sorted({n for n in ns if n > 0}))


def parse_family(text: str, inp: InputFile, exponents) -> PerturbationFamily:
    """``COEF*G^N`` with ``G`` a variable or a parenthesized polynomial, e.g. ``-w^N``."""
    s = text.replace(" ", "")
    if not s.endswith("^N"):
        raise UsageError("family must look like COEF*G^N")
    base = s[:-2]
    if base.endswith(")"):
        depth, k = 0, len(base) - 1
        while k >= 0:
            depth += {")": 1, "(": -1}.get(base[k], 0)
            if depth == 0:
                break
            k -= 1
        if k < 0:
            raise UsageError(f"unbalanced parentheses in {text!r}")
        direction, prefix = base[k + 1:-1], base[:k]
    else:
        k = len(base)
        while k > 0 and (base[k - 1].isalnum() or base[k - 1] == "_"):
            k -= 1
        direction, prefix = base[k:], base[:k]
        if not direction or direction[0].isdigit():
            raise UsageError(f"family direction missing in {text!r}")
    prefix = prefix[:-1] if prefix.endswith("*") else prefix
    coef = {"": "1", "+": "1", "-": "-1"}.get(prefix, prefix)
    return PerturbationFamily(inp.poly(direction), inp.ring.parse(coef), tuple(exponents))


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {text!r}") from None


def _sop(inp: InputFile, text: str):
    return [inp.poly(s.strip()) for s in text.split(";") if s.strip()]


# -- commands ---------------------------------------------------------------


def _verdict_result(v):
    return {"verdict": v.status.value, "certificate": v.certificate, "log": v.log}


def _estimate_result(est):
    return {"values": est.to_json()}


def run_command(args, inp: InputFile) -> dict:
    """Compute the command's result fields (no record metadata)."""
    cmd = args.command
    I = inp.ideal(args.ideal)
    if cmd == "fpure":
        return _verdict_result(fedder_fpure(I))
    if cmd == "compat":
        return _verdict_result(compatibly_fpure_along(I, inp.ideal(args.along)))
    if cmd == "sharp":
        return _verdict_result(sharply_fpure_pair(I, inp.poly(args.elem), _fraction(args.t), args.emax))
    if cmd == "sfr":
        return _verdict_result(sfr_certificate(I, inp.poly(args.c), args.emax))
    if cmd == "smooth":
        return _verdict_result(is_smooth(I, args.codim))
    if cmd == "hk":
        return _estimate_result(hk_estimate(I, inp.ideal(args.J), args.e))
    if cmd == "fsig":
        return _estimate_result(fsig_estimate(I, args.e))
    if cmd == "sdim":
        s, rf = sdim_rf_estimate(I, args.e1, args.e2)
        return {"values": {"e1": args.e1, "e2": args.e2, "sdim": s, "rF": rational_json(rf)}}
    if cmd in ("rsig", "csig"):
        fn = rsig_estimate if cmd == "rsig" else csig_estimate
        return _estimate_result(fn(I, _sop(inp, args.sop), args.e, args.budget))
    x = inp.poly(args.elem)
    exponents = parse_nrange(args.nrange)
    if args.deltas:
        fam = PerturbationFamily.explicit(_sop(inp, args.deltas))
    elif args.family:
        fam = parse_family(args.family, inp, exponents)
    else:
        raise UsageError("need --family or --deltas")
    if cmd == "perturb":
        prop = Prop(
            args.prop,
            along=inp.ideal(args.along) if args.along else None,
            elem=inp.poly(args.sharp_elem) if args.sharp_elem else None,
            t=_fraction(args.t) if args.t is not None else None,
            c=inp.poly(args.c) if args.c else None,
            e_max=args.emax,
        )
        return {"report": perturb_sweep(I, x, fam, prop).to_json()}
    inv = Invariant(
        args.invariant,
        J=inp.ideal(args.J) if args.J else None,
        sop=tuple(_sop(inp, args.sop)) if args.sop else (),
        budget=args.budget,
    )
    return {"report": continuity_table(I, x, fam, args.e, inv).to_json()}


def exit_code(record: dict) -> int:
    if "verdict" in record:
        return EXIT[record["verdict"]]
    return 0


# -- records, hashing, cache -----------------------------------------------


_NAME_FLAGS = {"along": "ideal", "J": "ideal", "elem": "poly", "sharp_elem": "poly", "c": "poly"}
_SKIP = {"command", "input", "ideal", "format", "config", "cache", "func"}


def canonical_flags(args, inp: InputFile) -> dict:
    """Flags with every named ideal/element replaced by its canonical content."""
    out = {}
    for key, value in sorted(vars(args).items()):
        if key in _SKIP or value is None:
            continue
        kind = _NAME_FLAGS.get(key)
        if kind == "ideal":
            value = inp.ideal(value).canonical_gens()
        elif kind == "poly":
            value = str(inp.poly(value))
        elif key in ("sop", "deltas"):
            value = [str(f) for f in _sop(inp, value)]
        out[key] = value
    return out


def input_hash(args, inp: InputFile, cfg: Config) -> str:
    ring = inp.ring
    key = {
        "ring": {"p": ring.p, "vars": list(ring.vars), "order": str(ring.order)},
        "generators": inp.ideal(args.ideal).canonical_gens(),
        "command": args.command,
        "flags": canonical_flags(args, inp),
        "config": _hashed_config(cfg),
        "version": __version__,
    }
    blob = json.dumps(key, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _hashed_config(cfg: Config) -> dict:
    snap = cfg.snapshot()
    snap.pop("threads")  # parallelism never changes a result
    return snap


def extract_timings(obj, path="") -> dict:
    """Remove every ``ms`` entry from ``obj`` in place; return them keyed by path."""
    found = {}
    if isinstance(obj, dict):
        if "ms" in obj:
            found[path or "/"] = obj.pop("ms")
        for k, v in obj.items():
            found.update(extract_timings(v, f"{path}/{k}"))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            found.update(extract_timings(v, f"{path}/{i}"))
    return found


def build_record(args, inp: InputFile, cfg: Config, digest: str, result: dict, total_ms: float) -> dict:
    ring = inp.ring
    record = {
        "command": args.command,
        "input_hash": digest,
        "input": {
            "ring": {"p": ring.p, "vars": list(ring.vars), "order": str(ring.order)},
            "ideal": args.ideal,
            "generators": inp.ideal(args.ideal).canonical_gens(),
            "flags": canonical_flags(args, inp),
        },
        **result,
        "version": __version__,
        "config": cfg.snapshot(),
        "cached": False,
    }
    detail = extract_timings(record)
    record["timings"] = {"total_ms": total_ms, "detail": detail}
    return record


def cache_dir(args) -> Path | None:
    d = args.cache or os.environ.get("FSING_CACHE")
    return Path(d) if d else None


def cache_load(directory: Path, digest: str) -> dict | None:
    path = directory / f"{digest}.json"
    if not path.exists():
        return None
    try:
        record = json.loads(path.read_text(encoding="utf-8"))
        if not isinstance(record, dict) or record.get("input_hash") != digest or "command" not in record:
            raise ValueError("hash mismatch")
        if "verdict" in record:
            EXIT[record["verdict"]]
    except (ValueError, KeyError, OSError) as exc:
        log.warning("ignoring corrupt cache entry %s: %s", path, exc)
        return None
    record["cached"] = True
    return record


def cache_store(directory: Path, digest: str, record: dict):
    directory.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    with os.fdopen(fd, "w", encoding="utf-8") as fh:
        json.dump(record, fh, sort_keys=True)
    os.replace(tmp, directory / f"{digest}.json")


# -- output -----------------------------------------------------------------


def _cell(v):
    if isinstance(v, dict) and "num" in v:
        return v["num"] if v["den"] == "1" else f"{v['num']}/{v['den']}"
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return "" if v is None else str(v)


def _clip(text: str, width: int = 160) -> str:
    return text if len(text) <= width else text[: width - 3] + "..."


def _table(rows: list[dict], cols: list[str]) -> list[str]:
    cells = [[_clip(_cell(r.get(c)), 60) for c in cols] for r in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    lines += ["  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip() for r in cells]
    return lines


def render_table(record: dict) -> str:
    lines = [f"command  {record['command']}", f"ideal    {record['input']['ideal']}"]
    if "verdict" in record:
        lines.append(f"verdict  {record['verdict']}")
        for k, v in (record["certificate"] or {}).items():
            lines.append(f"  {k}: {_clip(_cell(v))}")
        if record["log"]:
            cols = sorted({k for r in record["log"] for k in r})
            lines += ["  " + ln for ln in _table(record["log"], cols)]
    elif "values" in record:
        for k, v in record["values"].items():
            lines.append(f"{k:<8} {_cell(v)}")
    else:
        rep = record["report"]
        lines.append(f"family   {rep['family']}")
        lines.append(f"property {rep['property']}")
        rows = rep["rows"]
        wanted = ["N", "status", "value", "delta_abs", "delta_zero", "e_used", "delta"]
        cols = [c for c in wanted if any(c in r for r in rows)]
        lines += _table(rows, cols)
        lines.append(rep["stability_summary"] + f" ({rep['note']})")
    lines.append(f"cached   {str(record['cached']).lower()}")
    return "\n".join(lines)


def emit(record: dict, fmt: str, out):
    if fmt == "table":
        print(render_table(record), file=out)
    elif fmt == "jsonl":
        rows = record.get("report", {}).get("rows")
        if rows is None:
            print(json.dumps(record, sort_keys=True), file=out)
        else:
            for row in rows:
                print(json.dumps(row, sort_keys=True), file=out)
            head = dict(record, report={k: v for k, v in record["report"].items() if k != "rows"})
            print(json.dumps(head, sort_keys=True), file=out)
    else:
        print(json.dumps(record, sort_keys=True, indent=2), file=out)


# -- argument parser --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fsing", description="F-singularity tests for quotients of F_p[x1..xn].")
    parser.add_argument("--version", action="version", version=f"fsing {__version__}")
    common = _Parser(add_help=False)
    common.add_argument("-i", "--input", required=True, help="input .fsg file")
    common.add_argument("--ideal", required=True, help="ideal name in the input file")
    common.add_argument("--format", choices=("json", "table", "jsonl"), default="json")
    common.add_argument("--config", help="JSON config file")
    common.add_argument("--cache", help="result cache directory (default: $FSING_CACHE, else off)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, parents=[common], help=help_)

    add("fpure", "Fedder F-purity test")
    add("compat", "compatible F-purity along an ideal").add_argument("--along", required=True)
    p = add("sharp", "sharp F-purity of the pair (S/I, x^t)")
    p.add_argument("--elem", required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--emax", type=int)
    p = add("sfr", "strong F-regularity certificate search")
    p.add_argument("--c", required=True)
    p.add_argument("--emax", type=int)
    add("smooth", "Jacobian smoothness test").add_argument("--codim", type=int)
    p = add("hk", "Hilbert-Kunz length at level e")
    p.add_argument("--J", default="m")
    p.add_argument("--e", type=int, required=True)
    add("fsig", "F-signature estimate a_e/q^d").add_argument("--e", type=int, required=True)
    p = add("sdim", "splitting dimension and F-splitting ratio estimates")
    p.add_argument("--e1", type=int, required=True)
    p.add_argument("--e2", type=int, required=True)
    for name in ("rsig", "csig"):
        p = add(name, f"{name} estimate at level e")
        p.add_argument("--sop", required=True, help="parameters separated by ';'")
        p.add_argument("--e", type=int, required=True)
        p.add_argument("--budget", type=int)
    for name in ("perturb", "continuity"):
        p = add(name, "perturbation sweep" if name == "perturb" else "invariant continuity table")
        p.add_argument("--elem", required=True, help="element x (name or polynomial)")
        p.add_argument("--family", help="COEF*G^N, e.g. -w^N")
        p.add_argument("--deltas", help="explicit perturbations separated by ';'")
        p.add_argument("--nrange", default="1..3", help="A..B or a comma list")
        if name == "perturb":
            p.add_argument("--prop", required=True, choices=Prop.NAMES)
            p.add_argument("--along")
            p.add_argument("--sharp-elem", dest="sharp_elem")
            p.add_argument("--t")
            p.add_argument("--c")
            p.add_argument("--emax", type=int)
        else:
            p.add_argument("--invariant", required=True, choices=("hk", "fsig", "rsig"))
            p.add_argument("--e", type=int, default=1)
            p.add_argument("--J")
            p.add_argument("--sop")
            p.add_argument("--budget", type=int)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    logging.basicConfig(level=logging.WARNING, format="fsing: %(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
        cfg = Config.load(args.config)
        inp = load_input(args.input)
        inp.ideal(args.ideal)
        digest = input_hash(args, inp, cfg)
        directory = cache_dir(args)
        record = cache_load(directory, digest) if directory else None
        if record is None:
            t0 = time.perf_counter()
            with using_config(cfg), budget_scope():
                result = run_command(args, inp)
            total = round((time.perf_counter() - t0) * 1000, 3)
            record = build_record(args, inp, cfg, digest, result, total)
            if directory:
                cache_store(directory, digest, record)
    except BudgetExceeded as exc:
        print(f"fsing: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InputError as exc:
        print(f"fsing: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FsingError as exc:
        print(f"fsing: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH
    emit(record, args.format, out)
    return exit_code(record)


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
