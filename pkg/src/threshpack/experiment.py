"""Batch runs over (graph class, n, density, seed) cells, written as CSV rows."""

from __future__ import annotations

import csv
import io
import json
import logging
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Iterable, TextIO

from .bppc import BppcInstance, ffd_conflicts, solve_exact
from .density import threshold_from_density
from .generators import CLASS_KINDS, GeneratorSpec, gen_bppc_instance
from .graph import edge_density

log = logging.getLogger(__name__)

__all__ = [
    "ExperimentConfig",
    "ExperimentRow",
    "TABLE_DELTAS",
    "build_instance",
    "run_cell",
    "run_experiment",
    "write_csv",
    "read_csv",
    "summarize",
]

# density rows of the standard experiment grid
TABLE_DELTAS = (0.02, 0.08, 0.18, 0.32, 0.5, 0.68, 0.82, 0.92, 0.98)


@dataclass
class ExperimentConfig:
    classes: list[str] = field(default_factory=list)
    n: list[int] = field(default_factory=list)
    deltas: list[float] = field(default_factory=list)
    seeds: int = 0
    first_seed: int = 1
    time_limit: float = 600.0
    capacity: int = 150
    wmin: int = 20
    wmax: int = 100

    @classmethod
    def from_dict(cls, raw: dict) -> "ExperimentConfig":
        raw = dict(raw)
        if "B" in raw:
            raw["capacity"] = raw.pop("B")
        known = {f.name for f in fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls(**raw)
        for c in cfg.classes:
            if c not in ("T", "I", "A", "SG"):
                raise ValueError(f"unknown graph class {c!r}")
        return cfg

    @classmethod
    def load(cls, path: str | os.PathLike) -> "ExperimentConfig":
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))

    def cells(self) -> list[tuple[str, int, float, int]]:
        return [
            (c, n, delta, seed)
            for c in self.classes
            for n in self.n
            for delta in self.deltas
            for seed in range(self.first_seed, self.first_seed + self.seeds)
        ]


@dataclass
class ExperimentRow:
    graph_class: str
    n: int
    delta_target: float
    delta_measured: float | None = None
    seed: int = 0
    lower_bound: int | None = None
    ffd_k: int | None = None
    exact_k: int | None = None
    optimal: bool | None = None
    elapsed_ms: float | None = None
    node_count: int | None = None
    status: str = "ok"


def build_instance(graph_class: str, n: int, delta: float, seed: int, cfg: ExperimentConfig) -> BppcInstance:
    """Instance of class T/I/A/SG whose conflict graph targets density ``delta``.

    Class T converts the density into the generator threshold first.
    """
    kind = CLASS_KINDS[graph_class]
    param = threshold_from_density(n, delta) if graph_class == "T" else delta
    spec = GeneratorSpec(kind, n, param, seed)
    return gen_bppc_instance(spec, cfg.wmin, cfg.wmax, cfg.capacity)


def run_cell(cell: tuple[str, int, float, int], cfg: ExperimentConfig) -> ExperimentRow:
    graph_class, n, delta, seed = cell
    row = ExperimentRow(graph_class, n, delta, seed=seed)
    try:
        inst = build_instance(graph_class, n, delta, seed, cfg)
        row.delta_measured = edge_density(inst.graph).density
        row.ffd_k = ffd_conflicts(inst).k
        res = solve_exact(inst, cfg.time_limit)
        row.lower_bound = res.lower_bound
        row.exact_k = res.k
        row.optimal = res.optimal
        row.elapsed_ms = res.elapsed * 1000.0
        row.node_count = res.node_count
    except Exception as exc:  # recorded per row; the batch keeps going
        log.warning("cell %s failed: %s", cell, exc)
        row.status = f"error: {exc}"
    return row


def _run_star(args):
    return run_cell(*args)


def run_experiment(cfg: ExperimentConfig, jobs: int = 1) -> list[ExperimentRow]:
    """Run every cell; rows come back in config order whatever the completion order."""
    cells = cfg.cells()
    if jobs <= 1 or len(cells) <= 1:
        return [run_cell(c, cfg) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run_star, [(c, cfg) for c in cells]))


COLUMNS = [f.name for f in fields(ExperimentRow)]


def _cell_text(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(rows: Iterable[ExperimentRow], out: TextIO) -> None:
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(COLUMNS)
    for row in rows:
        d = asdict(row)
        writer.writerow([_cell_text(d[c]) for c in COLUMNS])


def read_csv(src: TextIO) -> list[ExperimentRow]:
    parse = {
        "n": int, "seed": int, "lower_bound": int, "ffd_k": int, "exact_k": int,
        "node_count": int, "delta_target": float, "delta_measured": float,
        "elapsed_ms": float, "optimal": lambda s: s == "true",
    }
    rows = []
    for rec in csv.DictReader(src):
        values = {}
        for key, text in rec.items():
            if key in parse:
                values[key] = parse[key](text) if text != "" else None
            else:
                values[key] = text
        rows.append(ExperimentRow(**values))
    return rows


def summarize(rows: list[ExperimentRow]) -> str:
    """Opt counts and mean solve time (seconds, solved instances only) per density and class."""
    classes = sorted({r.graph_class for r in rows}, key=lambda c: ("T", "I", "A", "SG").index(c))
    ns = sorted({r.n for r in rows})
    deltas = sorted({r.delta_target for r in rows})
    out = io.StringIO()
    for n in ns:
        out.write(f"n = {n}\n")
        header = f"{'delta':>6} " + " ".join(f"{c + ' Opt':>7} {c + ' Time':>9}" for c in classes)
        out.write(header + "\n")
        for delta in deltas:
            parts = [f"{delta:>6g}"]
            for c in classes:
                cell = [r for r in rows if r.n == n and r.delta_target == delta and r.graph_class == c]
                solved = [r for r in cell if r.optimal]
                mean = (
                    f"{sum(r.elapsed_ms for r in solved) / len(solved) / 1000.0:9.3f}"
                    if solved else f"{'-':>9}"
                )
                parts.append(f"{len(solved):>7d} {mean}")
            out.write(" ".join(parts) + "\n")
    return out.getvalue()
