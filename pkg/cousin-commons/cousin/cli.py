"""Command-line front end: ``cousin <command> [action] [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from collections.abc import Callable, Sequence
from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Any

from ._internal.checks import check_registry, run_suites
from ._internal.config import OUTPUT_FORMATS, JobConfig, exported_environ, library_environment
from ._internal.constants import EnvVar, ExitCode
from ._internal.logging_scopes import debug_logging_scope
from ._internal.publishers import Report, create_publisher, table_from_rows
from .core.char_ring import verma_character, weyl_character, weyl_dimension
from .core.cousin_complex import (
    big_weight,
    bw_amplitude,
    bwb,
    classical_ranges,
    flag_cousin,
    shimura_cousin_shape,
)
from .core.errors import ConfigError, CousinError
from .core.hecke import hecke_table, symplectic_genus
from .core.models import Sign, Weight
from .core.newton import finite_slope_dimension, h_slope_dimension, is_slope_leq_h, newton_polygon
from .core.presets import get_preset, load_datum_document
from .core.root_datum import LeviDatum, RootDatum
from .core.slope_calc import (
    build_condition,
    c_set,
    ell_min_max,
    is_kappa_regular,
    slope_bound,
    w_set,
)
from .core.utils import format_vector, parse_fraction, parse_index_set, parse_vector, parse_word
from .core.weyl import WeylElement, ell_pm, enumerate_group, kostant_reps

logger = logging.getLogger("CousinCLI")

GLOBAL_OPTIONS = frozenset(
    {"command", "action", "preset", "datum", "levi", "output_format", "config", "debug", "max_enum", "seed"}
)
VECTOR_FLAGS = frozenset(
    {"--kappa", "--nu", "--lambda", "--weight", "--coeffs", "--h", "--levi", "--w", "--word"}
)
_NUMERIC_LIST = re.compile(r"^-[\d/.,\s()\[\]-]+$")

Handler = Callable[[JobConfig], Report]


# ========== job helpers ==========


def _param(job: JobConfig, key: str, required: bool = True) -> Any:
    value = job.params.get(key)
    if value is None and required:
        raise ConfigError(f"{job.command} needs --{key}", module="cli", operation=job.command)
    return value


def _datum(job: JobConfig) -> RootDatum:
    if job.datum is not None:
        return load_datum_document(job.datum)
    if job.preset is None:
        raise ConfigError(f"{job.command} needs --preset or --datum", module="cli", operation=job.command)
    return get_preset(job.preset)


def _levi(job: JobConfig, datum: RootDatum) -> LeviDatum:
    return datum.levi(parse_index_set(job.levi))


def _weight(job: JobConfig, datum: RootDatum, key: str, required: bool = True) -> Weight | None:
    raw = _param(job, key, required)
    if raw is None:
        return None
    weight = Weight(parse_vector(raw))
    datum.check_dim(weight)
    return weight


def _element(job: JobConfig, datum: RootDatum, key: str = "w") -> WeylElement | None:
    raw = job.params.get(key)
    if raw is None:
        return None
    return enumerate_group(datum).element(parse_word(raw))


def _action(job: JobConfig, allowed: Sequence[str], default: str | None = None) -> str:
    action = job.action or default
    if action not in allowed:
        raise ConfigError(
            f"{job.command} action must be one of {', '.join(allowed)}, got {action!r}",
            module="cli",
            operation=job.command,
        )
    return action


def _weights_payload(vectors: Sequence[Weight]) -> list[list[str]]:
    return [v.to_list() for v in vectors]


# ========== weyl ==========


def _run_weyl(job: JobConfig) -> Report:
    datum = _datum(job)
    action = _action(job, ("list-kostant", "list-group"), "list-group")
    if action == "list-group":
        elements = list(enumerate_group(datum))
        payload = {"order": len(elements), "elements": [{"w": w.name, "length": w.length} for w in elements]}
        table = table_from_rows(("w", "length"), [(w.name, w.length) for w in elements])
        return Report("Weyl group", payload, table)
    levi = _levi(job, datum)
    reps = kostant_reps(datum, levi)
    rows = [(w.name, w.length, ell_pm(w, levi, Sign.PLUS), ell_pm(w, levi, Sign.MINUS)) for w in reps]
    payload = {
        "levi": sorted(levi.theta),
        "d": levi.d,
        "elements": [
            {"w": name, "length": length, "ell_plus": plus, "ell_minus": minus}
            for name, length, plus, minus in rows
        ],
    }
    return Report("Kostant representatives", payload, table_from_rows(("w", "length", "l+", "l-"), rows))


# ========== char ==========


def _run_char(job: JobConfig) -> Report:
    datum = _datum(job)
    action = _action(job, ("verma", "weyl", "dim"))
    weight = _weight(job, datum, "weight")
    assert weight is not None
    if action == "dim":
        dimension = weyl_dimension(datum, weight)
        return Report("Weyl dimension", {"weight": weight.to_list(), "dimension": dimension})
    depth = int(_param(job, "depth"))
    compute = verma_character if action == "verma" else weyl_character
    character = compute(datum, weight, depth)
    terms = list(character.items())
    payload = {
        "highest_weight": weight.to_list(),
        "depth": depth,
        "terms": [{"weight": w.to_list(), "multiplicity": c} for w, c in terms],
    }
    table = table_from_rows(("weight", "multiplicity"), [(str(w), c) for w, c in terms])
    return Report(f"{action} character", payload, table)


# ========== slopes ==========


def _run_slopes(job: JobConfig) -> Report:
    action = _action(job, ("cond", "table", "bound", "cset"))
    if action == "table":
        if job.preset is None:
            raise ConfigError("slopes table needs --preset", module="cli", operation="slopes")
        table = hecke_table(symplectic_genus(job.preset), job.params.get("variant") or "ss")
        rows = [(name, *forms) for name, forms in table.rows]
        return Report(
            f"{table.variant.value} slope bounds",
            table.to_dict(),
            table_from_rows(("", *table.columns), rows),
        )

    datum = _datum(job)
    levi = _levi(job, datum)
    sign = Sign(job.params.get("sign") or "+")

    if action == "cset":
        kappa = _weight(job, datum, "kappa")
        assert kappa is not None
        low, high = ell_min_max(datum, levi, kappa)
        payload: dict[str, Any] = {
            "c_set": [w.name for w in c_set(datum, levi, kappa, sign)],
            "w_set": [w.name for w in w_set(datum, levi, kappa, sign)],
            "ell_min": low,
            "ell_max": high,
            "regular": is_kappa_regular(datum, kappa),
        }
        return Report(f"C(kappa){sign.value}", payload)

    if action == "bound":
        kappa = _weight(job, datum, "kappa")
        w = _element(job, datum)
        if kappa is None or w is None:
            raise ConfigError("slopes bound needs --kappa and --w", module="cli", operation="slopes")
        variant = job.params.get("variant") or "conjectural"
        bound = slope_bound(datum, levi, w, kappa, variant, sign)
        if isinstance(bound, tuple):
            payload = {"w": w.name, "bounds": _weights_payload(bound)}
        else:
            payload = {"w": w.name, "bound": bound.to_list()}
        return Report("slope bound", payload)

    slope = _weight(job, datum, "lambda")
    assert slope is not None
    kind = _param(job, "kind")
    flavor = _param(job, "flavor")
    condition = build_condition(
        datum,
        levi,
        kind,
        flavor,
        sign,
        nu=_weight(job, datum, "nu", required=False),
        kappa=_weight(job, datum, "kappa", required=False),
        w=_element(job, datum),
        mw_form=job.params.get("mw_form") or "dot",
    )
    violated = condition.violated_by(slope)
    payload = {
        "condition": f"{sign.value},{kind}_{flavor}",
        "slope": slope.to_list(),
        "satisfied": violated is None,
        "violated_by": None if violated is None else _weights_payload(violated),
    }
    return Report("small slope condition", payload)


# ========== cousin ==========


def _run_cousin(job: JobConfig) -> Report:
    datum = _datum(job)
    action = _action(job, ("flag", "bwb", "ranges", "amplitude", "bigweight", "shimura"))

    if action == "bigweight":
        weight = _weight(job, datum, "weight")
        nu = _weight(job, datum, "nu")
        method = job.params.get("method") or "simple"
        return Report("big weight", {"big": big_weight(datum, weight, nu, method)})  # type: ignore[arg-type]

    kappa = _weight(job, datum, "kappa")
    assert kappa is not None
    if action == "bwb":
        result = bwb(datum, kappa)
        return Report("Borel-Weil-Bott", None if result is None else result.to_dict())
    if action == "amplitude":
        low, high = bw_amplitude(datum, kappa)
        return Report("amplitude", {"min": low, "max": high})
    if action == "ranges":
        return Report("classical ranges", classical_ranges(datum, _levi(job, datum), kappa).to_dict())

    if action == "flag":
        descriptor = flag_cousin(datum, kappa, int(job.params.get("depth") or 0))
        payload = descriptor.to_dict()
        payload["top"] = descriptor.top.to_list() if descriptor.top is not None else None
    else:
        sign = Sign(job.params.get("sign") or "+")
        descriptor = shimura_cousin_shape(datum, _levi(job, datum), kappa, sign)
        payload = descriptor.to_dict()
    rows = [
        (degree, term.w.name, format_vector(term.label))
        for degree in range(descriptor.d + 1)
        for term in descriptor.terms.get(degree, [])
    ]
    return Report(f"{action} Cousin complex", payload, table_from_rows(("degree", "w", "label"), rows))


# ========== newton ==========


def _matrix(raw: Any) -> list[list[Fraction]]:
    if isinstance(raw, str):
        text = raw.strip()
        if text.startswith("@"):
            try:
                text = Path(text[1:]).read_text(encoding="utf-8")
            except OSError as exc:
                raise ConfigError(f"cannot read matrix file: {exc}", module="cli", operation="newton") from exc
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"matrix is not valid JSON: {exc}", module="cli", operation="newton") from exc
    if not isinstance(raw, list):
        raise ConfigError("matrix must be a list of rows", module="cli", operation="newton")
    return [list(parse_vector(row)) for row in raw]


def _run_newton(job: JobConfig) -> Report:
    action = _action(job, ("poly", "slopedim", "leq"))
    p = int(_param(job, "p"))
    if action == "slopedim":
        matrix = _matrix(_param(job, "matrix"))
        h = job.params.get("h")
        if h is None:
            return Report("finite slope dimension", {"h": None, "dimension": finite_slope_dimension(matrix, p)})
        dimension = h_slope_dimension(matrix, parse_fraction(h), p)
        return Report("slope dimension", {"h": str(parse_fraction(h)), "dimension": dimension})

    coeffs = list(parse_vector(_param(job, "coeffs")))
    if action == "leq":
        h = parse_fraction(_param(job, "h"))
        return Report("slope bound", {"h": str(h), "slope_leq_h": is_slope_leq_h(coeffs, h, p)})
    polygon = newton_polygon(coeffs, p)
    payload = polygon.to_dict()
    payload["root_valuations"] = [str(v) for v in polygon.root_valuations()]
    rows = [(str(s.slope), s.length) for s in polygon.segments]
    return Report("Newton polygon", payload, table_from_rows(("slope", "length"), rows))


# ========== check ==========


def _run_check(job: JobConfig) -> Report:
    if job.action == "list":
        suites = check_registry().suites()
        payload = [{"suite": s.name, "description": s.description, "presets": list(s.presets)} for s in suites]
        rows = [(s.name, ", ".join(s.presets), s.description) for s in suites]
        return Report("property suites", payload, table_from_rows(("suite", "presets", "description"), rows))

    suites = job.params.get("suite") or None
    if isinstance(suites, str):
        suites = [s.strip() for s in suites.split(",") if s.strip()]
    radius = int(job.params.get("radius") or os.getenv(EnvVar.GRID_RADIUS.value) or 2)
    seed = job.seed if job.seed is not None else int(os.getenv(EnvVar.SEED.value) or 0)
    presets = [job.preset] if job.preset else None
    results = run_suites(suites, presets, radius=radius, seed=seed)
    passed = all(r.passed for r in results)
    payload = {"passed": passed, "radius": radius, "seed": seed, "results": [r.to_dict() for r in results]}
    rows = [(r.suite, r.preset, r.cases, r.failed, "ok" if r.passed else "FAILED") for r in results]
    for result in results:
        if not result.passed:
            logger.warning("Suite %s failed on %s: %s", result.suite, result.preset, "; ".join(result.failures[:3]))
    return Report(
        "property checks",
        payload,
        table_from_rows(("suite", "preset", "cases", "failed", "status"), rows),
        exit_code=ExitCode.OK if passed else ExitCode.CHECK_FAILED,
    )


HANDLERS: dict[str, Handler] = {
    "weyl": _run_weyl,
    "char": _run_char,
    "slopes": _run_slopes,
    "cousin": _run_cousin,
    "newton": _run_newton,
    "check": _run_check,
}


def execute(job: JobConfig) -> Report:
    handler = HANDLERS.get(job.command)
    if handler is None:
        raise ConfigError(f"unknown command {job.command!r}", module="cli", operation="run")
    logger.debug("Running %s %s", job.command, job.action or "")
    try:
        return handler(job)
    except ValueError as exc:
        raise ConfigError(str(exc), module="cli", operation=job.command) from exc


def run(job: JobConfig) -> str:
    """Execute *job* and render its report in the job's output format."""
    with debug_logging_scope():
        return create_publisher(job.output_format).render(execute(job))


# ========== argument parsing ==========


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", help="preset name, e.g. C2, GSp2g:g=3, product:A1xA2")
    common.add_argument("--datum", help="path to a JSON root-datum document")
    common.add_argument("--levi", help="simple indices of the Levi, e.g. 0 or 0,2")
    common.add_argument("--format", dest="output_format", choices=OUTPUT_FORMATS)
    common.add_argument("--config", help="path to a JSON job document")
    common.add_argument("--debug", action="store_true", default=None, help="enable COUSINDEBUG")
    common.add_argument("--max-enum", type=int, help="override every enumeration bound")
    common.add_argument("--seed", type=int)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(prog="cousin", description="Exact slope and Cousin-complex combinatorics")
    commands = parser.add_subparsers(dest="command", required=True)

    weyl = commands.add_parser("weyl", parents=[common], help="Weyl groups and Kostant representatives")
    listing = weyl.add_mutually_exclusive_group()
    listing.add_argument("--list-kostant", dest="action", action="store_const", const="list-kostant")
    listing.add_argument("--list-group", dest="action", action="store_const", const="list-group")

    char = commands.add_parser("char", parents=[common], help="Verma and Weyl characters")
    char.add_argument("action", choices=("verma", "weyl", "dim"))
    char.add_argument("--weight")
    char.add_argument("--depth", type=int)

    slopes = commands.add_parser("slopes", parents=[common], help="small slope conditions and bounds")
    slopes.add_argument("action", choices=("cond", "table", "bound", "cset"))
    slopes.add_argument("--kind", choices=("ss", "sss"))
    slopes.add_argument("--flavor", choices=("nu", "M", "Mw", "w", "b"))
    slopes.add_argument("--sign", choices=("+", "-"))
    slopes.add_argument("--variant", help="ss|sss for tables, conjectural|proven_pair for bounds")
    slopes.add_argument("--nu")
    slopes.add_argument("--kappa")
    slopes.add_argument("--lambda", dest="lambda")
    slopes.add_argument("--w")
    slopes.add_argument("--mw-form", choices=("dot", "linear"), help="shape of the sss Mw and w bounds")

    cousin = commands.add_parser("cousin", parents=[common], help="Cousin complexes and Borel-Weil-Bott")
    cousin.add_argument("action", choices=("flag", "bwb", "ranges", "amplitude", "bigweight", "shimura"))
    cousin.add_argument("--kappa")
    cousin.add_argument("--depth", type=int)
    cousin.add_argument("--weight")
    cousin.add_argument("--nu")
    cousin.add_argument("--method", choices=("simple", "full", "coefficients"))
    cousin.add_argument("--sign", choices=("+", "-"))

    newton = commands.add_parser("newton", parents=[common], help="Newton polygons and slope dimensions")
    newton.add_argument("action", choices=("poly", "slopedim", "leq"))
    newton.add_argument("--p", type=int)
    newton.add_argument("--coeffs")
    newton.add_argument("--matrix", help="JSON rows or @file.json")
    newton.add_argument("--h")

    check = commands.add_parser("check", parents=[common], help="run the property suites")
    check.add_argument("action", nargs="?", choices=("run", "list"), default="run")
    check.add_argument("--suite", action="append")
    check.add_argument("--radius", type=int)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    """Glue ``--kappa -3,3,-8`` into ``--kappa=-3,3,-8`` so argparse keeps the value."""
    out: list[str] = []
    skip = False
    for i, token in enumerate(argv):
        if skip:
            skip = False
            continue
        following = argv[i + 1] if i + 1 < len(argv) else None
        if token in VECTOR_FLAGS and following is not None and _NUMERIC_LIST.match(following):
            out.append(f"{token}={following}")
            skip = True
        else:
            out.append(token)
    return out


def _load_document(path: str) -> dict[str, Any]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot load {path}: {exc}", module="cli", operation="load") from exc
    if not isinstance(data, dict):
        raise ConfigError(f"{path} must hold a JSON object", module="cli", operation="load")
    return data


def job_from_args(args: argparse.Namespace) -> JobConfig:
    """Merge flags over an optional ``--config`` document."""
    values = vars(args)
    params = {k: v for k, v in values.items() if k not in GLOBAL_OPTIONS and v is not None}
    flags: dict[str, Any] = {
        "command": args.command,
        "action": values.get("action"),
        "preset": args.preset,
        "datum": _load_document(args.datum) if args.datum else None,
        "levi": sorted(parse_index_set(args.levi)) if args.levi is not None else None,
        "seed": args.seed,
    }
    if args.output_format is not None:
        flags["output_format"] = args.output_format

    if args.config:
        base = JobConfig.from_dict(_load_document(args.config))
        if base.command != args.command:
            raise ConfigError(
                f"job document is for {base.command!r}, not {args.command!r}", module="cli", operation="load"
            )
        overrides = {k: v for k, v in flags.items() if v is not None}
        if overrides.get("preset") is not None:
            base = replace(base, datum=None)
        if overrides.get("datum") is not None:
            base = replace(base, preset=None)
        return replace(base, **overrides, params={**base.params, **params})
    return JobConfig(**{k: v for k, v in flags.items() if v is not None or k == "command"}, params=params)


def _emit_error(error: CousinError) -> int:
    print(json.dumps({"error": error.to_dict()}, sort_keys=True, separators=(",", ":")), file=sys.stderr)
    return int(error.exit_code)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    raw = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(_join_negative_values(raw))
    overrides = library_environment(max_enum=args.max_enum, debug=bool(args.debug))
    with exported_environ(overrides):
        try:
            job = job_from_args(args)
            with debug_logging_scope():
                report = execute(job)
                output = create_publisher(job.output_format).render(report)
        except CousinError as exc:
            logger.debug("Command failed: %s", exc.message)
            return _emit_error(exc)
    print(output)
    return int(report.exit_code)


__all__ = ["HANDLERS", "build_parser", "execute", "job_from_args", "main", "run"]
