"""Golden-table runner: the digit-recursion engine against the enumerator.

Cells are the multiplicity counts over a grid of (r, n) at fixed m; each
row (one r, all n) is timed as a unit.  Oracle rows whose candidate box
exceeds the refusal threshold are skipped and recorded, not run.
Execution is single threaded so the timings are stable.
"""

from __future__ import annotations

import json
import platform
import time
from dataclasses import dataclass, field

from .counting import CountParams, is_prime, n_classical, n_classical_p2
from .oracle import FORCE_THRESHOLD, brute_count, candidate_box_size

__all__ = ["BenchReport", "TableSpec", "named_table_spec", "run_table"]

_ENGINES = ("fast", "oracle")

# Rows time one sweep over n at fixed m; noted in every report header.
_TIMING_NOTE = "timings are wall-clock seconds per row: one sweep over all n at fixed m"


@dataclass(frozen=True)
class TableSpec:
    """One table run: all (r, n) cells at fixed m for a prime p."""

    p: int
    r_min: int
    r_max: int
    n_values: tuple[int, ...]
    m: int = 0
    engines: tuple[str, ...] = ("fast",)

    def __post_init__(self) -> None:
        object.__setattr__(self, "n_values", tuple(self.n_values))
        object.__setattr__(self, "engines", tuple(self.engines))
        if not is_prime(self.p):
            raise ValueError(f"p must be prime, got {self.p}")
        if not 1 <= self.r_min <= self.r_max:
            raise ValueError(f"bad r range [{self.r_min}, {self.r_max}]")
        if not self.n_values:
            raise ValueError("n_values must be nonempty")
        if any(n < 0 for n in self.n_values):
            raise ValueError(f"n values must be >= 0, got {self.n_values}")
        if self.m < 0:
            raise ValueError(f"m must be >= 0, got {self.m}")
        if not self.engines or any(e not in _ENGINES for e in self.engines):
            raise ValueError(f"engines must be a nonempty subset of {_ENGINES}")

    @property
    def r_values(self) -> range:
        return range(self.r_min, self.r_max + 1)

    @classmethod
    def from_json(cls, text: str) -> "TableSpec":
        data = json.loads(text)
        return cls(
            p=data["p"],
            r_min=data["r_min"],
            r_max=data["r_max"],
            n_values=tuple(data["n_values"]),
            m=data.get("m", 0),
            engines=tuple(data.get("engines", ("fast",))),
        )


def named_table_spec(name: str, engines: tuple[str, ...] = ("fast",)) -> TableSpec:
    """The two shipped table layouts: p = 3 ("table1") and p = 5 ("table2"),
    r = 2..5, even n up to 10, m = 0."""
    ps = {"table1": 3, "table2": 5}
    if name not in ps:
        raise ValueError(f"unknown table {name!r}; expected one of {sorted(ps)}")
    return TableSpec(p=ps[name], r_min=2, r_max=5,
                     n_values=(0, 2, 4, 6, 8, 10), m=0, engines=engines)


@dataclass
class BenchReport:
    """Outcome of one table run.

    ``cells`` holds the fast-engine values, ``oracle_cells`` whatever the
    enumerator produced; any disagreement lists the cell in ``divergent``
    and marks the report failed.
    """

    p: int
    m: int
    n_values: tuple[int, ...]
    engines: tuple[str, ...]
    cells: dict[tuple[int, int], int]
    oracle_cells: dict[tuple[int, int], int]
    timings: dict[tuple[str, int], float]
    refused_rows: list[int]
    divergent: list[tuple[int, int, int, int]]
    failed: bool
    environment: str
    note: str = _TIMING_NOTE

    def rows(self) -> list[int]:
        return sorted({r for r, _ in self.cells} | {r for r, _ in self.oracle_cells})

    def to_markdown(self) -> str:
        lines = [
            f"counts at fixed m={self.m}, p={self.p}",
            f"note: {self.note}",
            f"environment: {self.environment}",
            "",
        ]
        headers = [r"r\n"] + [str(n) for n in self.n_values]
        if "fast" in self.engines:
            headers.append("fast (s)")
        if "oracle" in self.engines:
            headers.append("oracle (s)")
        lines.append("| " + " | ".join(headers) + " |")
        lines.append("|" + "---|" * len(headers))
        for r in self.rows():
            row = [str(r)]
            for n in self.n_values:
                value = self.cells.get((r, n), self.oracle_cells.get((r, n)))
                row.append("" if value is None else str(value))
            if "fast" in self.engines:
                t = self.timings.get(("fast", r))
                row.append("" if t is None else f"{t:.3f}")
            if "oracle" in self.engines:
                if r in self.refused_rows:
                    row.append(f"refused (box > {FORCE_THRESHOLD})")
                else:
                    t = self.timings.get(("oracle", r))
                    row.append("" if t is None else f"{t:.3f}")
            lines.append("| " + " | ".join(row) + " |")
        if self.failed:
            lines.append("")
            lines.append(f"FAILED: divergent cells {self.divergent}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        lines = ["r,n,fast,oracle"]
        keys = sorted(set(self.cells) | set(self.oracle_cells))
        for r, n in keys:
            fast = self.cells.get((r, n))
            oracle = self.oracle_cells.get((r, n))
            lines.append(
                f"{r},{n},{'' if fast is None else fast},"
                f"{'' if oracle is None else oracle}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        def cellmap(cells: dict[tuple[int, int], int]) -> dict:
            out: dict[str, dict[str, str]] = {}
            for (r, n), v in sorted(cells.items()):
                out.setdefault(str(r), {})[str(n)] = str(v)
            return out

        timings: dict[str, dict[str, float]] = {}
        for (engine, r), t in sorted(self.timings.items()):
            timings.setdefault(engine, {})[str(r)] = t
        payload = {
            "p": self.p,
            "m": self.m,
            "n_values": list(self.n_values),
            "engines": list(self.engines),
            "cells": cellmap(self.cells),
            "oracle_cells": cellmap(self.oracle_cells),
            "timings": timings,
            "refused_rows": self.refused_rows,
            "divergent": [list(x) for x in self.divergent],
            "failed": self.failed,
            "environment": self.environment,
            "note": self.note,
        }
        return json.dumps(payload, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "BenchReport":
        data = json.loads(text)

        def uncellmap(obj: dict) -> dict[tuple[int, int], int]:
            return {
                (int(r), int(n)): int(v)
                for r, row in obj.items()
                for n, v in row.items()
            }

        timings = {
            (engine, int(r)): float(t)
            for engine, row in data["timings"].items()
            for r, t in row.items()
        }
        return cls(
            p=data["p"],
            m=data["m"],
            n_values=tuple(data["n_values"]),
            engines=tuple(data["engines"]),
            cells=uncellmap(data["cells"]),
            oracle_cells=uncellmap(data["oracle_cells"]),
            timings=timings,
            refused_rows=list(data["refused_rows"]),
            divergent=[tuple(x) for x in data["divergent"]],
            failed=data["failed"],
            environment=data["environment"],
            note=data["note"],
        )


def _default_environment() -> str:
    return (
        f"{platform.python_implementation()} {platform.python_version()} "
        f"on {platform.platform()}"
    )


def run_table(spec: TableSpec, *, force_oracle: bool = False,
              environment: str | None = None) -> BenchReport:
    """Compute every cell with each requested engine, timing whole rows.

    Oracle rows above the refusal threshold are recorded in
    ``refused_rows`` and skipped unless ``force_oracle`` is set.  Cells
    computed by both engines must agree; otherwise the report is marked
    failed with the divergent cells listed.
    """
    fast_engine = n_classical_p2 if spec.p == 2 else n_classical
    cells: dict[tuple[int, int], int] = {}
    oracle_cells: dict[tuple[int, int], int] = {}
    timings: dict[tuple[str, int], float] = {}
    refused: list[int] = []
    for r in spec.r_values:
        if "fast" in spec.engines:
            cache: dict = {}
            start = time.perf_counter()
            for n in spec.n_values:
                cells[(r, n)] = fast_engine(CountParams(spec.p, r, spec.m, n), cache)
            timings[("fast", r)] = time.perf_counter() - start
        if "oracle" in spec.engines:
            box = sum(
                candidate_box_size(CountParams(spec.p, r, spec.m, n))
                for n in spec.n_values
            )
            if box > FORCE_THRESHOLD and not force_oracle:
                refused.append(r)
                continue
            start = time.perf_counter()
            for n in spec.n_values:
                oracle_cells[(r, n)] = brute_count(
                    CountParams(spec.p, r, spec.m, n), force=True
                )
            timings[("oracle", r)] = time.perf_counter() - start
    divergent = [
        (r, n, cells[(r, n)], value)
        for (r, n), value in sorted(oracle_cells.items())
        if (r, n) in cells and cells[(r, n)] != value
    ]
    return BenchReport(
        p=spec.p,
        m=spec.m,
        n_values=spec.n_values,
        engines=spec.engines,
        cells=cells,
        oracle_cells=oracle_cells,
        timings=timings,
        refused_rows=refused,
        divergent=divergent,
        failed=bool(divergent),
        environment=environment or _default_environment(),
    )
