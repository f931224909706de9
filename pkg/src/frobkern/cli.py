"""Command-line surface: every operation, machine-readable output.

Exit status: 0 success, 2 usage error, 3 computation refusal (oracle
threshold), 1 internal error or engine disagreement.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .bench import BenchReport, TableSpec, named_table_spec, run_table
from .characters import (
    CharacterPoly,
    char_Br,
    char_Gr,
    char_quantum_Br,
    char_quantum_Gr,
    poincare_Ur,
)
from .counting import (
    CountParams,
    graded_count,
    n_classical,
    n_classical_p2,
    n_quantum,
)
from .oracle import OracleRefused, brute_count
from .reduced_ring import ReducedBasis, basis, hilbert_coeffs

__all__ = ["CliConfig", "dispatch", "main"]

_FORMATS = ("json", "csv", "markdown", "plain")
_CONFIG_ENV = "FROBKERN_CONFIG"
_CONFIG_KEYS = ("output", "oracle_force", "memo_shared")


@dataclass
class CliConfig:
    """Resolved run options; command line overrides the config file."""

    output_format: str = "plain"
    oracle_force: bool = False
    memo_shared: bool = False
    config_file: Path | None = None

    @property
    def cache(self) -> dict | None:
        if not self.memo_shared:
            return None
        if not hasattr(self, "_cache"):
            self._cache = {}
        return self._cache


def _load_config_file(path: Path) -> dict:
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise ValueError(f"cannot read config file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"config file {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError(f"config file {path} must hold a JSON object")
    unknown = set(data) - set(_CONFIG_KEYS)
    if unknown:
        raise ValueError(f"unknown config keys {sorted(unknown)}; expected {_CONFIG_KEYS}")
    if "output" in data and data["output"] not in _FORMATS:
        raise ValueError(f"config output must be one of {_FORMATS}")
    return data


def _resolve_config(args: argparse.Namespace) -> CliConfig:
    cfg = CliConfig()
    path = args.config or os.environ.get(_CONFIG_ENV)
    if path:
        cfg.config_file = Path(path)
        data = _load_config_file(cfg.config_file)
        cfg.output_format = data.get("output", cfg.output_format)
        cfg.oracle_force = data.get("oracle_force", cfg.oracle_force)
        cfg.memo_shared = data.get("memo_shared", cfg.memo_shared)
    if args.output is not None:
        cfg.output_format = args.output
    if getattr(args, "oracle_force", None):
        cfg.oracle_force = True
    if getattr(args, "memo_shared", None):
        cfg.memo_shared = True
    return cfg


# ---------------------------------------------------------------------------
# emitters


def _emit_scalar(value: int, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps({"value": str(value)}, separators=(",", ":")))
    elif fmt == "csv":
        print("value")
        print(value)
    elif fmt == "markdown":
        print("| value |")
        print("| --- |")
        print(f"| {value} |")
    else:
        print(value)


def _emit_character(chi: CharacterPoly, fmt: str) -> None:
    if fmt == "json":
        print(chi.to_json())
    elif fmt == "csv":
        print("weight,count")
        for w, c in chi.coefficients().items():
            print(f"{w},{c}")
    elif fmt == "markdown":
        print("| weight | count |")
        print("| --- | --- |")
        for w, c in chi.coefficients().items():
            print(f"| {w} | {c} |")
    else:
        for w, c in chi.coefficients().items():
            print(f"{w}\t{c}")


def _emit_sequence(values: list[int], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps([str(v) for v in values], separators=(",", ":")))
    elif fmt == "csv":
        print("degree,count")
        for d, v in enumerate(values):
            print(f"{d},{v}")
    elif fmt == "markdown":
        print("| degree | count |")
        print("| --- | --- |")
        for d, v in enumerate(values):
            print(f"| {d} | {v} |")
    else:
        for v in values:
            print(v)


def _emit_basis(bas: ReducedBasis, fmt: str) -> None:
    if fmt == "json":
        print(bas.to_json())
    elif fmt == "csv":
        writer = csv.writer(sys.stdout)
        for element in bas.elements:
            writer.writerow(element)
    elif fmt == "markdown":
        width = max((len(e) for e in bas.elements), default=0)
        print("| " + " | ".join(f"a{i+1}" for i in range(width)) + " |")
        print("|" + "---|" * max(width, 1))
        for element in bas.elements:
            print("| " + " | ".join(str(x) for x in element) + " |")
    else:
        for element in bas.elements:
            print(" ".join(str(x) for x in element))


def _emit_report(report: BenchReport, fmt: str) -> None:
    if fmt == "json":
        print(report.to_json())
    elif fmt == "csv":
        print(report.to_csv(), end="")
    else:  # markdown doubles as the plain human format
        print(report.to_markdown(), end="")


# ---------------------------------------------------------------------------
# command handlers


def _cmd_count(args: argparse.Namespace, cfg: CliConfig) -> int:
    params = CountParams(args.p, args.r, args.m, args.n)
    if args.p2 and params.p != 2:
        raise ValueError("--p2 requires p == 2")
    if params.p == 2:
        value = n_classical_p2(params, cfg.cache)
    else:
        value = n_classical(params, cfg.cache)
    if args.oracle:
        check = brute_count(params, force=cfg.oracle_force)
        if check != value:
            print(
                f"engine disagreement at {params}: fast={value} oracle={check}",
                file=sys.stderr,
            )
            return 1
    _emit_scalar(value, cfg.output_format)
    return 0


def _cmd_quantum(args: argparse.Namespace, cfg: CliConfig) -> int:
    _emit_scalar(n_quantum(args.p, args.r, args.n, cfg.cache), cfg.output_format)
    return 0


def _cmd_graded(args: argparse.Namespace, cfg: CliConfig) -> int:
    params = CountParams(args.p, args.r, args.m, args.n)
    _emit_scalar(graded_count(params, args.d), cfg.output_format)
    return 0


def _cmd_char_b(args: argparse.Namespace, cfg: CliConfig) -> int:
    chi = char_Br(args.p, args.r, args.m, args.nmax, cfg.cache)
    _emit_character(chi, cfg.output_format)
    return 0


def _cmd_char_g(args: argparse.Namespace, cfg: CliConfig) -> int:
    chi = char_Gr(args.p, args.r, args.m, args.nmax, cfg.cache)
    _emit_character(chi, cfg.output_format)
    return 0


def _cmd_char_quantum_b(args: argparse.Namespace, cfg: CliConfig) -> int:
    chi = char_quantum_Br(args.p, args.r, args.nmax, cfg.cache)
    _emit_character(chi, cfg.output_format)
    return 0


def _cmd_char_quantum_g(args: argparse.Namespace, cfg: CliConfig) -> int:
    chi = char_quantum_Gr(args.p, args.r, args.nmax, cfg.cache)
    _emit_character(chi, cfg.output_format)
    return 0


def _cmd_poincare_u(args: argparse.Namespace, cfg: CliConfig) -> int:
    _emit_sequence(poincare_Ur(args.p, args.r, args.dmax), cfg.output_format)
    return 0


def _cmd_basis(args: argparse.Namespace, cfg: CliConfig) -> int:
    _emit_basis(basis(args.p, args.r), cfg.output_format)
    return 0


def _cmd_hilbert(args: argparse.Namespace, cfg: CliConfig) -> int:
    _emit_sequence(hilbert_coeffs(args.p, args.r, args.dmax), cfg.output_format)
    return 0


def _cmd_bench(args: argparse.Namespace, cfg: CliConfig) -> int:
    if args.table == "custom":
        if args.spec is None:
            raise ValueError("bench custom needs a spec file")
        spec = TableSpec.from_json(Path(args.spec).read_text())
    else:
        if args.spec is not None:
            raise ValueError(f"bench {args.table} takes no spec file")
        engines = tuple(args.engines.split(",")) if args.engines else ("fast",)
        spec = named_table_spec(args.table, engines=engines)
    report = run_table(spec, force_oracle=cfg.oracle_force)
    _emit_report(report, cfg.output_format)
    return 1 if report.failed else 0


# ---------------------------------------------------------------------------
# parser


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--output", "-o", choices=_FORMATS, default=None,
                     help="output format (default plain, or the config file's)")
    sub.add_argument("--config", default=None,
                     help=f"JSON config file (default ${_CONFIG_ENV})")
    sub.add_argument("--oracle-force", dest="oracle_force", action="store_true",
                     default=None, help="run enumerations above the refusal threshold")
    sub.add_argument("--memo-shared", dest="memo_shared", action="store_true",
                     default=None, help="share the digit-count memo across computations")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobkern",
        description="Exact cohomology multiplicity counts for SL2 Frobenius kernels",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("count", help="multiplicity count for (p, r, m, n)")
    for name in ("p", "r", "m", "n"):
        sub.add_argument(name, type=int)
    sub.add_argument("--p2", action="store_true",
                     help="insist on the p = 2 equation (errors unless p == 2)")
    sub.add_argument("--oracle", action="store_true",
                     help="cross-check against the enumeration engine")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_count)

    sub = commands.add_parser("quantum", help="quantum multiplicity count for (p, r, n)")
    for name in ("p", "r", "n"):
        sub.add_argument(name, type=int)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_quantum)

    sub = commands.add_parser("graded", help="count solutions of degree d")
    for name in ("p", "r", "m", "n", "d"):
        sub.add_argument(name, type=int)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_graded)

    sub = commands.add_parser("char-b", help="Borel-kernel character up to weight nmax")
    for name in ("p", "r", "m"):
        sub.add_argument(name, type=int)
    sub.add_argument("--nmax", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_char_b)

    sub = commands.add_parser("char-g", help="full-kernel character up to weight nmax")
    for name in ("p", "r", "m"):
        sub.add_argument(name, type=int)
    sub.add_argument("--nmax", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_char_g)

    sub = commands.add_parser("char-quantum-b",
                              help="quantum Borel-kernel character up to root multiple nmax")
    for name in ("p", "r"):
        sub.add_argument(name, type=int)
    sub.add_argument("--nmax", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_char_quantum_b)

    sub = commands.add_parser("char-quantum-g",
                              help="quantum full-kernel character up to root multiple nmax")
    for name in ("p", "r"):
        sub.add_argument(name, type=int)
    sub.add_argument("--nmax", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_char_quantum_g)

    sub = commands.add_parser("poincare-u", help="unipotent-kernel dimensions by degree")
    for name in ("p", "r"):
        sub.add_argument(name, type=int)
    sub.add_argument("--dmax", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_poincare_u)

    sub = commands.add_parser("basis", help="free-module basis of the reduced ring")
    for name in ("p", "r"):
        sub.add_argument(name, type=int)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_basis)

    sub = commands.add_parser("hilbert", help="graded dimensions of the reduced ring")
    for name in ("p", "r"):
        sub.add_argument(name, type=int)
    sub.add_argument("--dmax", type=int, required=True)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_hilbert)

    sub = commands.add_parser("bench", help="run a golden table")
    sub.add_argument("table", choices=("table1", "table2", "custom"))
    sub.add_argument("spec", nargs="?", default=None,
                     help="table spec JSON (custom only)")
    sub.add_argument("--engines", default=None,
                     help="comma-separated subset of fast,oracle (named tables)")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_bench)

    return parser


def dispatch(argv: list[str] | None = None) -> int:
    """Parse argv, run the command, and return the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else list(argv))
    except SystemExit as exc:  # argparse handles --help (0) and usage errors (2)
        return exc.code if isinstance(exc.code, int) else 2
    try:
        cfg = _resolve_config(args)
        return args.handler(args, cfg)
    except OracleRefused as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 1


def main() -> None:
    raise SystemExit(dispatch())
