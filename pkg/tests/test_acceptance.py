"""End-to-end acceptance checks, one test per criterion.

Each test records a PASS/FAIL line (shown in the terminal summary) and then
asserts, so a failing criterion also fails the run.
"""

import statistics
import time

import numpy as np
import pytest

from oracles import chromatic_number, min_bins
from threshpack import (
    BppcInstance,
    GeneratorSpec,
    Graph,
    approx_threshold_from_density,
    brute_force_oracle,
    complement,
    decompose_universal,
    derive_interval_model,
    edge_density,
    expected_bppc_lower_bound,
    expected_density_from_threshold,
    gen_bppc_instance,
    gen_soriano_gendreau,
    gen_threshold,
    intersection_graph,
    lower_bound,
    realize_threshold_representation,
    recognize_threshold,
    solve_exact,
    threshold_from_density,
)
from threshpack.experiment import TABLE_DELTAS, ExperimentConfig, run_experiment
from threshpack.threshold import rebuild_from_weights

TABLE = [0.0, 0.02, 0.08, 0.18, 0.32, 0.5, 0.68, 0.82, 0.92, 0.98]
DESK_TIME_LIMIT = 30.0


def test_density_table(criterion):
    start = time.perf_counter()
    worst = 0.0
    for k, target in enumerate(TABLE):
        d = k / 10
        mean = np.mean([edge_density(gen_threshold(1000, d, seed)[0]).density for seed in range(1, 11)])
        worst = max(worst, abs(mean - target))
    elapsed = time.perf_counter() - start
    ok = worst <= 0.01 and elapsed < 30
    criterion(1, ok, f"density table n=1000: max |mean - table| = {worst:.4f} (tol 0.01), {elapsed:.1f} s")
    assert ok


def test_generator_output_is_threshold(criterion):
    rng = np.random.default_rng(2024)
    accepted = 0
    for seed in range(100):
        n = int(rng.choice([50, 250, 1000]))
        d = float(rng.integers(1, 10)) / 10
        accepted += bool(recognize_threshold(gen_threshold(n, d, seed)[0]))
    forbidden = {
        "P4": Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)]),
        "C4": Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (4, 1)]),
        "2K2": Graph.from_edges(4, [(1, 2), (3, 4)]),
    }
    forbidden_rejected = all(not recognize_threshold(g) for g in forbidden.values())
    sg_rejected = sum(not recognize_threshold(gen_soriano_gendreau(200, seed)) for seed in range(100))
    ok = accepted == 100 and forbidden_rejected and sg_rejected >= 95
    criterion(2, ok, f"threshold generator accepted {accepted}/100; P4/C4/2K2 rejected={forbidden_rejected}; "
                     f"probabilistic generator rejected {sg_rejected}/100 (need >= 95)")
    assert ok


def test_formula_roundtrips(criterion):
    grid = [k / 100 for k in range(101)]
    round_err = max(
        abs(expected_density_from_threshold(n, threshold_from_density(n, x)) - x)
        for n in (100, 250, 1000) for x in grid
    )
    approx_ratio = max(
        abs(threshold_from_density(n, x) - approx_threshold_from_density(x)) * 2 * n
        for n in (100, 250, 500, 1000, 10000) for x in grid
    )
    ok = round_err <= 1e-9 and approx_ratio <= 1.0
    criterion(3, ok, f"roundtrip error {round_err:.2e} (tol 1e-9); approximation gap {approx_ratio:.4f} x 1/(2n)")
    assert ok


def test_lower_bound_example(criterion):
    start = time.perf_counter()
    exact = expected_bppc_lower_bound(120, 0.9)
    bounds = [lower_bound(gen_bppc_instance(GeneratorSpec("threshold", 120, 0.9, seed))) for seed in range(1, 21)]
    mean = statistics.mean(bounds)
    elapsed = time.perf_counter() - start
    ok = exact == pytest.approx(108, abs=1e-9) and abs(mean - 108) <= 2 and elapsed < 10
    criterion(4, ok, f"expected bound {exact:g}; mean computed bound over 20 seeds {mean:.2f} (108 +/- 2), "
                     f"{elapsed:.1f} s")
    assert ok


def random_threshold_graphs(count=100, max_n=200, seed=77):
    rng = np.random.default_rng(seed)
    graphs = []
    for k in range(count):
        n = int(rng.integers(1, max_n + 1))
        graphs.append(gen_threshold(n, float(rng.random()), 10_000 + k)[0])
    return graphs


def test_interval_model_roundtrip(criterion):
    graphs = random_threshold_graphs()
    start = time.perf_counter()
    good = sum(intersection_graph(derive_interval_model(recognize_threshold(g))) == g for g in graphs)
    elapsed = time.perf_counter() - start
    ok = good == 100 and elapsed < 10
    criterion(5, ok, f"interval model reproduces {good}/100 graphs, {elapsed:.1f} s")
    assert ok


def test_complement_and_realization(criterion):
    graphs = random_threshold_graphs()
    closed = sum(bool(recognize_threshold(complement(g))) for g in graphs)
    realized = 0
    for g in graphs:
        p, d = realize_threshold_representation(recognize_threshold(g))
        realized += rebuild_from_weights(p, d) == g and bool(np.all((p >= 0) & (p <= 1)))
    ok = closed == 100 and realized == 100
    criterion(6, ok, f"complement accepted {closed}/100; weight realization reproduces {realized}/100")
    assert ok


def test_solver_oracle_equivalence(criterion):
    start = time.perf_counter()
    rng = np.random.default_rng(7)
    kinds = ["threshold", "interval", "uniform_arbitrary"]
    mismatches = 0
    total = 0
    for k in range(60):
        kind = kinds[k % 3]
        n = int(rng.integers(2, 10))
        spec = GeneratorSpec(kind, n, float(rng.uniform(0, 0.95)), 500 + k)
        inst = gen_bppc_instance(spec)
        res = solve_exact(inst, DESK_TIME_LIMIT)
        mismatches += not (res.optimal and res.k == brute_force_oracle(inst))
        total += 1
    decomposition_bad = 0
    for k in range(30):
        d = float(rng.uniform(0.6, 1.0))
        inst = gen_bppc_instance(GeneratorSpec("threshold", int(rng.integers(10, 31)), d, 900 + k))
        whole = solve_exact(inst, DESK_TIME_LIMIT, use_decomposition=False)
        dec = decompose_universal(inst)
        part = solve_exact(dec.subinstance, DESK_TIME_LIMIT)
        decomposition_bad += not (whole.optimal and part.optimal and whole.k == dec.g + part.k)
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and decomposition_bad == 0 and elapsed < 60
    criterion(7, ok, f"exact vs brute force: {total - mismatches}/{total} agree; k = g + k(Q) on "
                     f"{30 - decomposition_bad}/30 threshold instances; {elapsed:.1f} s")
    assert ok


def test_reductions(criterion):
    rng = np.random.default_rng(11)
    packing_ok = colouring_ok = 0
    for k in range(30):
        n = int(rng.integers(1, 10))
        weights = [int(w) for w in rng.integers(0, 101, size=n)]
        inst = BppcInstance(Graph.empty(n), tuple(weights), 150)
        packing_ok += solve_exact(inst, DESK_TIME_LIMIT).k == min_bins(weights, 150)
    for k in range(30):
        n = int(rng.integers(1, 10))
        spec = GeneratorSpec("uniform_arbitrary", n, float(rng.random()), 700 + k) if n > 1 else \
            GeneratorSpec("threshold", n, 0.5, 700 + k)
        base = gen_bppc_instance(spec)
        inst = BppcInstance(base.graph, base.weights, max(150, sum(base.weights)))
        colouring_ok += solve_exact(inst, DESK_TIME_LIMIT).k == chromatic_number(inst.graph)
    ok = packing_ok == 30 and colouring_ok == 30
    criterion(8, ok, f"no conflicts = bin packing on {packing_ok}/30; B >= sum(w) = colouring on {colouring_ok}/30")
    assert ok


def test_expected_structure_large_n(criterion):
    n = 10_000
    report = []
    ok = True
    for d in (0.2, 0.5, 0.8):
        omegas, gs = [], []
        for seed in range(1, 11):
            cert = recognize_threshold(gen_threshold(n, d, seed)[0])
            omegas.append(cert.t)
            gs.append(cert.g)
        omega_err = abs(np.mean(omegas) - n * d) / (n * d)
        g_expected = max(0.0, n * (2 * d - 1))
        g_err = abs(np.mean(gs) - g_expected)
        g_ok = g_err <= 20 if d == 0.5 else g_err <= 0.02 * g_expected
        ok &= omega_err <= 0.02 and g_ok
        report.append(f"d={d}: omega rel err {omega_err:.4f}, g mean {np.mean(gs):.1f} vs {g_expected:g}")
    criterion(9, ok, "n=10000, mean of 10 seeds; " + "; ".join(report))
    assert ok


def test_class_ordering_small_n(criterion):
    cfg = ExperimentConfig(classes=["T", "I", "A"], n=[30], deltas=list(TABLE_DELTAS), seeds=5,
                           time_limit=DESK_TIME_LIMIT)
    rows = run_experiment(cfg)
    ordered_rows = 0
    cells = []
    for delta in TABLE_DELTAS:
        means = {c: statistics.mean(r.elapsed_ms for r in rows if r.graph_class == c and r.delta_target == delta)
                 for c in "TIA"}
        holds = means["T"] <= means["I"] <= means["A"]
        ordered_rows += holds
        cells.append(f"{delta:g}:{means['T']:.0f}/{means['I']:.0f}/{means['A']:.0f}{'' if holds else '*'}")
    t_rows = [r for r in rows if r.graph_class == "T"]
    t_optimal = sum(bool(r.optimal) for r in t_rows)
    ok = ordered_rows * 2 > len(TABLE_DELTAS) and t_optimal == len(t_rows)
    criterion(10, ok, f"T<=I<=A mean ms on {ordered_rows}/9 rows (need 5), T optimal {t_optimal}/{len(t_rows)}; "
                      "rows delta:T/I/A, * = order broken: " + " ".join(cells))
    assert ok
