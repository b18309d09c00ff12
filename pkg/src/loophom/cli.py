"""Command line front end.

Subcommands:

* ``compute``  Betti tables for chosen components, as text, CSV, or JSON.
* ``verify``   run one of the structural checks and report Pass/Fail.
* ``export``   like compute but always writes a file.

Field specs are ``q`` for the rationals or ``f<p>`` for a prime p.
Component ranges are written ``a..b`` (inclusive). Exit codes: 0 success
(and no Fail verdict), 1 a check Failed, 2 bad configuration, 3 a cutoff
or finiteness error, 4 an I/O error. Output is deterministic; set
LOOPHOM_WORKERS to allow that many parallel component computations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import Optional

from . import analysis
from .analysis import SpaceSpec, VerificationReport
from .errors import (
    CompositeCharacteristic,
    CutoffTooTight,
    InfiniteBasis,
    OddN,
)
from .scalars import Field, make_field
from .spaces import HOL, LOOP

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_CONFIG = 2
EXIT_CUTOFF = 3
EXIT_IO = 4

CHECKS = ("collapse", "periodicity", "dichotomy", "unit", "mod2-oracle", "all")


class ConfigError(Exception):
    pass


def _parse_field(spec: str) -> Field:
    s = spec.strip().lower()
    try:
        if s == "q":
            return make_field("rational")
        if s.startswith("f") and s[1:].isdigit():
            return make_field(int(s[1:]))
    except CompositeCharacteristic as exc:
        raise ConfigError(f"field spec {spec!r}: {exc}") from None
    raise ConfigError(f"field spec {spec!r} is not 'q' or 'f<p>'")


def _parse_components(single: Optional[int], ranged: Optional[str]) -> list:
    if single is not None and ranged is not None:
        raise ConfigError("give --component or --components, not both")
    if single is not None:
        return [single]
    if ranged is None:
        raise ConfigError("a component selection is required")
    text = ranged.strip()
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ConfigError(f"bad component range {ranged!r}") from None
        if lo > hi:
            raise ConfigError(f"empty component range {ranged!r}")
        return list(range(lo, hi + 1))
    try:
        return [int(text)]
    except ValueError:
        raise ConfigError(f"bad component selection {ranged!r}") from None


def _field_name(field: Field) -> str:
    return "Q" if field.characteristic == 0 else f"F{field.characteristic}"


def _workers() -> int:
    raw = os.environ.get("LOOPHOM_WORKERS", "1")
    try:
        w = int(raw)
    except ValueError:
        raise ConfigError(f"LOOPHOM_WORKERS={raw!r} is not an integer") from None
    return max(1, w)


def _columns(space: SpaceSpec, components, cutoff: int, grading: str) -> dict:
    """Betti columns per component, computed with at most LOOPHOM_WORKERS
    concurrent component jobs; results are merged in component order."""
    analysis._page(space.n, space.field, space.variant, cutoff + 1)
    def one(k: int) -> dict:
        return analysis.betti_table(space, [k], cutoff, grading).column(k)

    w = min(_workers(), max(len(components), 1))
    if w == 1:
        return {k: one(k) for k in components}
    with ThreadPoolExecutor(max_workers=w) as pool:
        futures = {k: pool.submit(one, k) for k in components}
        return {k: futures[k].result() for k in components}


def _render_text(space, cutoff, grading, columns) -> str:
    lines = [
        f"space={space.variant} n={space.n} field={_field_name(space.field)} "
        f"grading={grading} cutoff={cutoff}"
    ]
    for k in sorted(columns):
        lines.append(f"component {k}:")
        col = columns[k]
        if not col:
            lines.append("  (zero through the cutoff)")
        for d in sorted(col):
            lines.append(f"  degree {d}: {col[d]}")
    return "\n".join(lines) + "\n"


def _render_json(space, cutoff, grading, columns) -> str:
    payload = {
        "space": space.variant,
        "n": space.n,
        "field": _field_name(space.field),
        "grading": grading,
        "cutoff": cutoff,
        "components": {
            str(k): {str(d): columns[k][d] for d in sorted(columns[k])}
            for k in sorted(columns)
        },
    }
    return json.dumps(payload, separators=(",", ":")) + "\n"


def _render_csv(columns) -> str:
    lines = ["component,degree,dimension"]
    for k in sorted(columns):
        for d in sorted(columns[k]):
            lines.append(f"{k},{d},{columns[k][d]}")
    return "\n".join(lines) + "\n"


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    with open(path, "w", newline="") as fh:
        fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loophom",
        description="Exact homology of sphere mapping spaces into projective space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_space: bool):
        if need_space:
            p.add_argument("--space", choices=(HOL, LOOP), required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--field", required=True, help="q or f<p>")
        p.add_argument("--component", type=int)
        p.add_argument("--components", help="a..b or a single integer")
        p.add_argument("--cutoff", type=int, default=analysis.DEFAULT_CUTOFF)

    pc = sub.add_parser("compute", help="Betti tables for components")
    common(pc, need_space=True)
    pc.add_argument("--grading", choices=("ordinary", "regraded"), default="ordinary")
    pc.add_argument("--format", choices=("text", "csv", "json"), default="text")
    pc.add_argument("--output", help="write here instead of stdout")

    pv = sub.add_parser("verify", help="run a structural check")
    pv.add_argument("--check", choices=CHECKS, required=True)
    common(pv, need_space=False)
    pv.add_argument("--k", type=int, help="power of iota for periodicity/unit")

    pe = sub.add_parser("export", help="compute and write CSV or JSON")
    common(pe, need_space=True)
    pe.add_argument("--grading", choices=("ordinary", "regraded"), default="ordinary")
    pe.add_argument("--format", choices=("csv", "json"), default="json")
    pe.add_argument("--output", required=True)
    return parser


def _validate_cutoff(cutoff: int) -> None:
    if cutoff < 0:
        raise ConfigError(f"cutoff must be nonnegative, got {cutoff}")


def _cmd_compute(args, to_file_required: bool = False) -> int:
    field = _parse_field(args.field)
    components = _parse_components(args.component, args.components)
    _validate_cutoff(args.cutoff)
    if args.n < 1:
        raise ConfigError(f"n must be positive, got {args.n}")
    if args.space == HOL and any(k < 0 for k in components):
        raise ConfigError("holomorphic components must be nonnegative")
    space = SpaceSpec(args.space, args.n, field)
    columns = _columns(space, components, args.cutoff, args.grading)
    if args.format == "text":
        text = _render_text(space, args.cutoff, args.grading, columns)
    elif args.format == "json":
        text = _render_json(space, args.cutoff, args.grading, columns)
    else:
        text = _render_csv(columns)
    _write_output(text, args.output)
    return EXIT_OK


def _prime_of(field: Field, what: str) -> int:
    if field.characteristic == 0:
        raise ConfigError(f"{what} needs a prime field, got q")
    return field.characteristic


def _cmd_verify(args) -> int:
    field = _parse_field(args.field)
    _validate_cutoff(args.cutoff)
    if args.n < 1:
        raise ConfigError(f"n must be positive, got {args.n}")
    reports: list[VerificationReport] = []
    selected = [args.check] if args.check != "all" else [
        "collapse", "periodicity", "dichotomy", "unit", "mod2-oracle"
    ]
    running_all = args.check == "all"
    for check in selected:
        if check == "collapse":
            if running_all and field.characteristic == 0:
                continue
            p = _prime_of(field, "collapse")
            comps = _parse_components(args.component, args.components)
            reports.append(analysis.check_collapse(args.n, p, comps, args.cutoff))
        elif check == "periodicity":
            if running_all and (field.characteristic == 0 or args.k is None):
                continue
            p = _prime_of(field, "periodicity")
            comps = _parse_components(args.component, args.components)
            if args.k is None:
                raise ConfigError("periodicity needs --k")
            reports.append(
                analysis.check_periodicity(args.n, p, args.k, comps, args.cutoff)
            )
        elif check == "dichotomy":
            comps = _parse_components(args.component, args.components)
            reports.append(analysis.check_dichotomy(args.n, field, comps, args.cutoff))
        elif check == "unit":
            if running_all and (field.characteristic == 0 or args.k is None):
                continue
            p = _prime_of(field, "unit")
            if args.k is None:
                raise ConfigError("unit needs --k")
            if args.k < 1:
                raise ConfigError("unit needs a positive --k")
            reports.append(analysis.unit_check(args.n, p, args.k, args.cutoff))
        else:  # mod2-oracle
            if field.characteristic != 2:
                if args.check == "all":
                    continue
                raise ConfigError("mod2-oracle needs --field f2")
            if args.n % 2:
                if args.check == "all":
                    continue
                raise ConfigError("mod2-oracle needs even n")
            comps = _parse_components(args.component, args.components)
            reports.append(analysis.check_mod2_oracle(args.n, comps, args.cutoff))
    for report in reports:
        print(report)
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


_SIGNED_VALUE_FLAGS = ("--component", "--components", "--k")


def _glue_negative_values(argv: list) -> list:
    # argparse mistakes "-2..2" after --components for an option; fuse them.
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _SIGNED_VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(tok + "=" + argv[i + 1])
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_glue_negative_values(list(argv)))
    try:
        if args.command == "compute":
            return _cmd_compute(args)
        if args.command == "export":
            return _cmd_compute(args)
        return _cmd_verify(args)
    except (InfiniteBasis, CutoffTooTight) as exc:
        print(f"loophom: cutoff error: {exc}", file=sys.stderr)
        return EXIT_CUTOFF
    except (ConfigError, OddN, ValueError) as exc:
        print(f"loophom: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"loophom: io error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
