"""Command line front end: mult e, mult br, mult verify <suite>.

Every invocation prints a single JSON report to stdout.  The report
echoes the command and its parameters, then the result values, then
wall time and library version; apart from the wall_ms field the bytes
are a function of the arguments alone, so reports can be diffed across
runs and machines.  Integers above 2^53 are emitted as strings to stay
exact in JavaScript consumers, and nothing is ever printed as a float.

Exit status: 0 for success, 1 for unusable input or a computation that
gave up, 2 when a cross-checked identity failed to hold.  The verify
subcommands draw seeded random instances, so a given (command, seed)
pair names a reproducible experiment.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from importlib import import_module
from pathlib import Path

from . import __version__
from .bourbaki import assume_pipeline, bourbaki_pair, br_all_rank, dependence_example
from .errors import AreaMismatch, BrmultError, VerificationError
from .fields import QQ, PrimeField
from .ideals import Ideal
from .jones import JonesInstance, jones_classify, jones_sweep
from .linkage import auslander_chain, br_by_links, colength_by_links, link_chain
from .modules import Presentation, buchsbaum_rim, random_module
from .monomial import colength_by_fittings
from .multiplicity import multiplicity
from .poly import parse as parse_poly
from .sampling import GeneralSampler, random_monomial_ideal
from .svgfig import staircase_svg

SAFE_INT = 2**53

# modules holding retry and stabilization knobs; the top-level names in
# the package shadow some submodules, so resolve them by import path
_TUNABLE = tuple(
    import_module(f".{name}", __package__)
    for name in ("sampling", "multiplicity", "modules", "linkage", "bourbaki", "jones")
)
_MULT_MOD = _TUNABLE[1]
_MODULES_MOD = _TUNABLE[2]
_DEFAULT_TRIALS = _TUNABLE[0].GENERIC_TRIALS
_DEFAULT_DIFFERENCE_CAP = _MULT_MOD.DIFFERENCE_CAP
_DEFAULT_LAMBDA_CAP = _MODULES_MOD.LAMBDA_CAP


def _apply_tuning(args):
    for mod in _TUNABLE:
        mod.GENERIC_TRIALS = args.trials
    cap = getattr(args, "max_power", None)
    _MULT_MOD.DIFFERENCE_CAP = (
        cap if cap is not None else _DEFAULT_DIFFERENCE_CAP
    )
    _MODULES_MOD.LAMBDA_CAP = cap if cap is not None else _DEFAULT_LAMBDA_CAP


def _field_of(args):
    return QQ if args.field == "q" else PrimeField()


def _jsonable(v):
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, int):
        return str(v) if abs(v) > SAFE_INT else v
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(u) for k, u in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(u) for u in v]
    return str(v)


def _emit(report: dict, args) -> None:
    text = json.dumps(_jsonable(report), indent=2) + "\n"
    sys.stdout.write(text)
    out = getattr(args, "json_out", None)
    if out:
        Path(out).write_text(text)


def _write_svg(text: str | None, args) -> None:
    out = getattr(args, "svg_out", None)
    if not out:
        return
    if text is None:
        raise ValueError("no staircase figure for this command")
    Path(out).write_text(text)


def _monomial_or_die(ideal: Ideal, what: str):
    mono = ideal.monomial_form()
    if mono is None:
        raise ValueError(f"staircase figure needs monomial {what}")
    return mono


# -- mult e ------------------------------------------------------------


def _cmd_e(args):
    field = _field_of(args)
    a = Ideal.parse(args.gens, field)
    sampler = GeneralSampler(args.seed, field)
    rep = multiplicity(a, route=args.route, sampler=sampler)
    result = {"e": rep.value, "method": rep.route.upper()}
    if rep.route == "all":
        result["consistent"] = True
        result["by_route"] = dict(rep.by_route)
    if rep.reduction is not None:
        result["reduction"] = [str(p) for p in rep.reduction.gens]
    svg = None
    if args.svg_out:
        svg = staircase_svg(_monomial_or_die(a, "generators"))
    return result, svg, 0


# -- mult br -----------------------------------------------------------


def _parse_matrix(text: str, field) -> Presentation:
    """JSON rows of entry strings, or rows split by ";" and entries by ","."""
    stripped = text.lstrip()
    if stripped.startswith("["):
        rows = json.loads(text)
        if (
            not isinstance(rows, list)
            or not rows
            or not all(isinstance(r, list) and r for r in rows)
        ):
            raise ValueError("matrix JSON must be a nonempty array of rows")
        return Presentation(
            [[parse_poly(str(cell), field) for cell in row] for row in rows],
            field,
        )
    return Presentation.parse(text, field)


def _cmd_br(args):
    field = _field_of(args)
    P = _parse_matrix(args.matrix, field)
    sampler = GeneralSampler(args.seed, field)
    rep = buchsbaum_rim(P, route=args.route, sampler=sampler)
    result = {"br": rep.value, "method": rep.route.upper()}
    if rep.route == "all":
        result["consistent"] = True
        result["by_route"] = dict(rep.by_route)
    if rep.reduction is not None:
        result["reduction"] = [
            [str(p) for p in row] for row in rep.reduction.matrix
        ]
    svg = None
    if args.svg_out:
        svg = staircase_svg(
            _monomial_or_die(P.fitting_ideal(0), "maximal minors")
        )
    return result, svg, 0


# -- mult verify -------------------------------------------------------


def _tally(count, runner):
    """Run the per-index check, sorting outcomes into pass/fail/error.

    A False return or a VerificationError is a broken identity; any
    other library error means the instance could not be certified at
    all, which is reported separately and keeps exit status 1, not 2.
    """
    fails = []
    errors = []
    for k in range(count):
        try:
            ok = runner(k)
        except VerificationError as exc:
            fails.append({"index": k, "reason": str(exc)})
            continue
        except BrmultError as exc:
            errors.append({"index": k, "reason": str(exc)})
            continue
        if not ok:
            fails.append({"index": k, "reason": "value mismatch"})
    result = {"pass": count - len(fails) - len(errors), "fail": len(fails)}
    if fails:
        result["failures"] = fails
    if errors:
        result["errors"] = errors
    code = 2 if fails else (1 if errors else 0)
    return result, code


def _suite_rankone(args, sampler, field):
    first = [None]

    def check(k):
        rng = sampler.stream(f"rankone:{k}")
        mono = random_monomial_ideal(rng)
        if first[0] is None:
            first[0] = mono
        a = Ideal(mono.to_polys(field), field)
        chain = link_chain(a, sampler, f"rankone:{k}")
        return colength_by_links(chain) == mono.colength()

    result, code = _tally(args.count, check)
    svg = staircase_svg(first[0]) if args.svg_out and first[0] else None
    return result, svg, code


def _suite_shortformula(args, sampler, field):
    def check(k):
        rank = 2 + k % 2
        M = random_module(sampler, rank, rank + 1, f"short:{k}")
        rep = br_by_links(M, sampler, f"short:{k}")
        auslander_chain(rep.chain.matrix, rep.chain)
        return True

    result, code = _tally(args.count, check)
    return result, None, code


def _suite_ingclosed(args, sampler, field):
    first = [None]

    def check(k):
        rng = sampler.stream(f"ingclosed:{k}")
        closed = random_monomial_ideal(rng).integral_closure()
        if first[0] is None:
            first[0] = closed
        return colength_by_fittings(closed).colength == closed.colength()

    result, code = _tally(args.count, check)
    svg = staircase_svg(first[0]) if args.svg_out and first[0] else None
    return result, svg, code


def _suite_thmallrank(args, sampler, field):
    def check(k):
        rank = 2 + k % 2
        M = random_module(sampler, rank, rank + 1, f"allrank:{k}")
        pair = bourbaki_pair(M, sampler, f"allrank:{k}")
        data = assume_pipeline(
            M,
            pair.bourbaki_ideal,
            pair.module_image,
            pair.kernel,
            sampler,
            f"allrank:{k}",
        )
        rep = br_all_rank(data)
        return rep.value == rep.reference

    result, code = _tally(args.count, check)
    return result, None, code


def _jones_figure(sweep, bound) -> JonesInstance | None:
    """First mismatch, else the first doubly corrected sector, else the
    first valid instance, in sweep order."""
    if sweep.mismatches:
        return JonesInstance(*sweep.mismatches[0][0])
    fallback = None
    for s in range(1, bound + 1):
        for t in range(1, bound + 1):
            for i in range(1, bound + 1):
                for j in range(1, bound + 1):
                    for d in range(bound + 1):
                        for e in range(bound + 1):
                            try:
                                inst = JonesInstance(s, t, i, j, d, e)
                            except ValueError:
                                continue
                            if fallback is None:
                                fallback = inst
                            try:
                                if jones_classify(inst) == "A3":
                                    return inst
                            except BrmultError:
                                continue
    return fallback


def _suite_jones(args, sampler, field):
    sweep = jones_sweep(args.bound, sampler, field)
    fail = len(sweep.conflicts) + len(sweep.mismatches)
    result = {
        "pass": sweep.total - sweep.degenerate - fail,
        "fail": fail,
        "total": sweep.total,
        "degenerate": sweep.degenerate,
        "labels": sweep.labels,
        "methods": sweep.methods,
    }
    if sweep.conflicts:
        result["conflicts"] = [list(c) for c in sweep.conflicts]
    if sweep.mismatches:
        result["mismatches"] = [
            {"instance": list(tup), "delta": delta}
            for tup, delta in sweep.mismatches
        ]
    svg = None
    if args.svg_out:
        inst = _jones_figure(sweep, args.bound)
        if inst is not None:
            svg = staircase_svg(inst.image, annotations=inst)
    return result, svg, 2 if fail else 0


def _suite_counterexample(args, sampler, field):
    data = dependence_example(sampler=sampler, field=field, fresh=args.fresh)
    try:
        rep = br_all_rank(data)
        summands, br = rep.summands, rep.reference
    except VerificationError as exc:
        if not isinstance(exc.actual, dict):
            raise
        summands, br = exc.actual, exc.expected
    result = {
        "e_I": summands["e_I"],
        "e_J": summands["e_J"],
        "e_F0_IJ": summands["e_F0_IJ"],
        "e_F0_IJprime": summands["e_F0_IJprime"],
        "rhs": summands["rhs"],
        "br": br,
        "match": summands["rhs"] == br,
    }
    if args.fresh:
        result["fresh"] = True
    svg = None
    if args.svg_out:
        svg = staircase_svg(_monomial_or_die(data.module_image, "image"))
    # the fixed non-general reduction must miss; a recertified one must not
    code = 0 if result["match"] == args.fresh else 2
    return result, svg, code


_SUITES = {
    "rankone": _suite_rankone,
    "shortformula": _suite_shortformula,
    "ingclosed": _suite_ingclosed,
    "thmallrank": _suite_thmallrank,
    "jones": _suite_jones,
    "counterexample": _suite_counterexample,
}


def _cmd_verify(args):
    field = _field_of(args)
    sampler = GeneralSampler(args.seed, field)
    result, svg, code = _SUITES[args.suite](args, sampler, field)
    return result, svg, code


# -- wiring ------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser):
    p.add_argument(
        "--field",
        choices=("q", "fp"),
        default="fp",
        help="coefficients: exact rationals or a large prime field",
    )
    p.add_argument("--seed", type=int, default=0, help="random stream seed")
    p.add_argument(
        "--trials",
        type=int,
        default=_DEFAULT_TRIALS,
        help="retries for general-position draws",
    )
    p.add_argument(
        "--max-power",
        type=int,
        default=None,
        help="cap for power and symmetric-power stabilization",
    )
    p.add_argument("--json-out", help="also write the JSON report here")
    p.add_argument("--svg-out", help="write a staircase figure here")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mult",
        description="Multiplicities of ideals and module presentations "
        "over k[x,y] localized at the origin.",
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_e = sub.add_parser("e", help="multiplicity of an m-primary ideal")
    p_e.add_argument(
        "--gens", required=True, help='generators, e.g. "x^2, x*y, y^2"'
    )
    p_e.add_argument(
        "--route",
        choices=("reduction", "difference", "newton", "all"),
        default="all",
    )
    _add_common(p_e)
    p_e.set_defaults(handler=_cmd_e)

    p_br = sub.add_parser(
        "br", help="Buchsbaum-Rim multiplicity of a matrix column span"
    )
    p_br.add_argument(
        "--matrix",
        required=True,
        help="JSON rows of entry strings, or rows split by ';'",
    )
    p_br.add_argument(
        "--route", choices=("reduction", "lambda", "all"), default="reduction"
    )
    _add_common(p_br)
    p_br.set_defaults(handler=_cmd_br)

    p_v = sub.add_parser("verify", help="randomized identity suites")
    vsub = p_v.add_subparsers(dest="suite", required=True)
    counts = {
        "rankone": 25,
        "shortformula": 10,
        "ingclosed": 15,
        "thmallrank": 10,
    }
    for name, default in counts.items():
        p = vsub.add_parser(name)
        p.add_argument(
            "--count", type=int, default=default, help="instances to draw"
        )
        _add_common(p)
        p.set_defaults(handler=_cmd_verify)
    p_j = vsub.add_parser("jones")
    p_j.add_argument(
        "--bound", type=int, default=6, help="sweep all parameters up to this"
    )
    _add_common(p_j)
    p_j.set_defaults(handler=_cmd_verify)
    p_c = vsub.add_parser("counterexample")
    p_c.add_argument(
        "--fresh",
        action="store_true",
        help="recertify the inner reduction instead of the fixed bad one",
    )
    _add_common(p_c)
    p_c.set_defaults(handler=_cmd_verify)
    return parser


def _command_name(args) -> str:
    if args.command == "verify":
        return f"verify {args.suite}"
    return args.command


def _params(args) -> dict:
    skip = {"command", "suite", "handler", "json_out", "svg_out"}
    out = {}
    for key in ("gens", "matrix", "route", "count", "bound", "fresh"):
        if hasattr(args, key):
            out[key] = getattr(args, key)
    for key in ("field", "seed", "trials", "max_power"):
        out[key] = getattr(args, key)
    return {k: v for k, v in out.items() if k not in skip and v is not None}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    _apply_tuning(args)
    start = time.monotonic()
    try:
        result, svg, code = args.handler(args)
        _write_svg(svg if args.svg_out else None, args)
    except AreaMismatch as exc:
        _emit(
            {
                "error": str(exc),
                "delta": exc.delta,
                "candidates": list(exc.candidates or ()),
            },
            args,
        )
        return 2
    except VerificationError as exc:
        _emit(
            {"error": str(exc), "expected": exc.expected, "actual": exc.actual},
            args,
        )
        return 2
    except (BrmultError, ValueError, json.JSONDecodeError, OSError) as exc:
        _emit({"error": str(exc)}, args)
        return 1
    report = {"command": _command_name(args), "params": _params(args)}
    report.update(result)
    report["wall_ms"] = int((time.monotonic() - start) * 1000)
    report["version"] = __version__
    _emit(report, args)
    return code


if __name__ == "__main__":
    sys.exit(main())
