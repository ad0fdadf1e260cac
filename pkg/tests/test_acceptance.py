"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
lines interleaved) or ``python tests/test_acceptance.py``.
"""

import json
import subprocess
import sys
import time

import mpmath
import pytest
from oracles import brute_minimal_systems, largest_part_partition_counts

from permclasses.bounds import (
    BoundVerdict,
    Skipped,
    chain_bound,
    filtration_check,
    kernel_quotient_sweep,
    subgroup_inequality_sample,
    subprim_sample_check,
    verify_chain_bound,
)
from permclasses.classes import (
    LimitExceeded,
    class_count,
    class_count_alternating,
    class_count_enumerate,
    class_count_wreath_sym,
)
from permclasses.claims import PASS, run_claims
from permclasses.constructions import agl1, alternating, build, catalog, mathieu, parse_group_spec, parse_spec
from permclasses.core import is_primitive, minimal_block_systems
from permclasses.partitions import bound_sandwich, partition_number

CLI = [sys.executable, "-m", "permclasses.cli"]


@pytest.fixture
def report(capsys):
    """Call with (criterion, ok, detail); prints one line past pytest's capture."""
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
    return emit


def test_criterion_1_claims_manifest(report):
    start = time.perf_counter()
    result = run_claims()
    elapsed = time.perf_counter() - start
    ok = result.overall == PASS and result.count(PASS) == 14 and elapsed < 60
    report(1, ok, f"{result.count(PASS)}/14 claims pass in {elapsed:.2f}s")
    assert len(result.records) == 14
    assert [r.name for r in result.records if r.status != PASS] == []
    assert elapsed < 60


def test_criterion_2_oracles(report):
    failures = []
    for n in range(3, 9):
        if class_count_alternating(n) != class_count_enumerate(alternating(n)).count:
            failures.append(f"A({n})")
    for n in range(2, 5):
        if class_count_wreath_sym(2, n) != class_count_enumerate(parse_group_spec(f"wr(S(2),S({n}))")).count:
            failures.append(f"S2 wr S{n}")
    if class_count_wreath_sym(2, 1) != class_count_enumerate(parse_group_spec("S(2)")).count:
        failures.append("S2 wr S1")
    if [partition_number(n) for n in range(201)] != largest_part_partition_counts(200):
        failures.append("p(0..200)")
    checked = 0
    for spec in catalog(8, min_degree=2, products=False):
        group = build(parse_spec(spec))
        if not group.is_transitive():
            continue
        checked += 1
        if [s.blocks for s in minimal_block_systems(group)] != brute_minimal_systems(group):
            failures.append(f"blocks {spec}")
    report(2, not failures, f"{checked} block oracles, mismatches: {failures or 'none'}")
    assert failures == []


def test_criterion_3_main_sweep(report):
    start = time.perf_counter()
    done = subprocess.run(CLI + ["verify", "sweep", "--max-degree", "24", "--json"],
                          capture_output=True, text=True)
    elapsed = time.perf_counter() - start
    doc = json.loads(done.stdout)
    main = [r for r in doc["records"] if r["claim_id"] == "main-bound"]
    main_ok = [r for r in main if r["status"] == "Pass"]
    ok = done.returncode == 0 and doc["summary"]["fail"] == 0 and elapsed < 300
    report(3, ok, f"exit={done.returncode} main-bound {len(main_ok)} hold, "
                  f"{len(main) - len(main_ok)} skipped, overall {doc['summary']}, {elapsed:.0f}s")
    assert done.returncode == 0
    assert all(r["status"] in ("Pass", "Skipped") for r in main)
    assert elapsed < 300


def test_criterion_4_subgroup_inequalities(report):
    sample = subgroup_inequality_sample(count=100, seed=0)
    kernels = kernel_quotient_sweep(16)
    verdicts = sample + [v for v in kernels if isinstance(v, BoundVerdict)]
    skipped = [v for v in kernels if isinstance(v, Skipped)]
    failed = [v for v in verdicts if not v.holds]
    report(4, not failed, f"{len(sample)} verdicts on 100 pairs, {len(kernels) - len(skipped)} kernel "
                          f"quotients hold, {len(skipped)} kernels over the limit, {len(failed)} fail")
    assert len(sample) == 300
    assert failed == []


def test_criterion_5_partition_sandwich(report):
    bad = []
    for n in range(1, 5001):
        r = bound_sandwich(n)
        if not (r.holds and mpmath.mpf(r.lower_margin) > 1e-9 and mpmath.mpf(r.upper_margin) > 1e-9):
            bad.append(n)
    report(5, not bad, f"n = 1..5000, failures: {bad[:5] or 'none'}")
    assert bad == []


def test_criterion_6_chain_bound(report):
    exact = chain_bound((2, 12)) == 315392 == 2**12 * 77
    failed, chain_count, filt_count, filt_skipped = [], 0, 0, []
    for spec in catalog(16, min_degree=4, products=False):
        group = build(parse_spec(spec))
        if is_primitive(group):
            continue
        try:
            class_count(group)
        except LimitExceeded:
            continue
        v = verify_chain_bound(group)
        chain_count += 1
        if not v.holds:
            failed.append(v)
        system = minimal_block_systems(group)[0]
        try:
            out = filtration_check(group, system)
        except LimitExceeded:
            filt_skipped.append(spec)
            continue
        filt_count += 1
        failed += [x for x in out if not x.holds]
    ok = exact and not failed
    report(6, ok, f"chain_bound(2,12)={chain_bound((2, 12))}, {chain_count} chain bounds, "
                  f"{filt_count} filtrations, {len(failed)} fail, kernels over limit: {filt_skipped}")
    assert exact
    assert failed == []


def test_criterion_7_primitive_sampling(report):
    failed, total = [], 0
    for group in [agl1(5), agl1(7), agl1(11), agl1(13), mathieu(11)]:
        out = subprim_sample_check(group, seed=0, samples=64)
        total += len(out)
        failed += [v for v in out if not v.holds]
    m11 = class_count_enumerate(mathieu(11))
    ok = not failed and (m11.count, m11.elements_visited, partition_number(11)) == (10, 7920, 56)
    report(7, ok, f"{total} verdicts, {len(failed)} fail; k(M11)={m11.count} from "
                  f"{m11.elements_visited} elements <= p(11)={partition_number(11)}")
    assert failed == []
    assert (m11.count, m11.elements_visited) == (10, 7920)


def test_criterion_8_determinism(report):
    runs = [subprocess.run(CLI + ["verify", "claims", "--json", "--seed", "7"], capture_output=True)
            for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and runs[0].returncode == runs[1].returncode == 0
    report(8, same, f"{len(runs[0].stdout)} bytes, identical={same}")
    assert same


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
