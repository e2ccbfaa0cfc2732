"""Acceptance suite: one test per criterion, each at its stated tolerance.

Each criterion is a plain function returning ``(passed, detail)`` and is timed
against its runtime bound. Results are printed as one ``PASS``/``FAIL`` line
per criterion (in the pytest terminal summary, or directly when this file is
run as a script).
"""

import itertools
import math
import sys
import time

import numpy as np
import pytest

from qudit_teleport.antisym import (
    LambdaMatrix,
    PartitionSpec,
    antisym_dimension,
    antisymmetric_state,
    antisymmetrizer_rank,
    laplace_partition,
    schmidt_spectrum,
)
from qudit_teleport.bell_filter import bell_filter_unitary, check_sufficiency, coincidence_project, generalized_bell_state
from qudit_teleport.fock import PureState, Register
from qudit_teleport.optics import ModeUnitary, apply_unitary, fock_basis, permanent, permanent_naive, random_unitary, transition_amplitude
from qudit_teleport.prep import prepare_antisymmetric, qutrit_prep_demo
from qudit_teleport.teleport import QuditInput, efficiency_curve, teleport_collective, teleport_single_qudit

RESULTS: dict[int, tuple[bool, str]] = {}

SEED = 20240611


def criterion_1():
    worst = 0.0
    ok = True
    for d in range(2, 7):
        passed, eta = check_sufficiency(bell_filter_unitary(d).unitary)
        err = float(np.max(np.abs(eta - 1 / d)))
        worst = max(worst, err)
        ok &= passed and err <= 1e-12
    return ok, f"max |eta - 1/d| = {worst:.2e} for d = 2..6"


def criterion_2():
    worst = 0.0
    for d in range(2, 6):
        psi = antisymmetric_state(LambdaMatrix(tuple(range(d))))
        _, p = coincidence_project(apply_unitary(bell_filter_unitary(d).unitary, psi), range(d))
        worst = max(worst, abs(p - 1))
    return worst <= 1e-12, f"max |p - 1| = {worst:.2e} for d = 2..5"


def criterion_3():
    worst_off = 0.0
    min_id = math.inf
    for d in range(2, 5):
        u = bell_filter_unitary(d).unitary
        for idx in itertools.product(range(d), repeat=2):
            _, p = coincidence_project(apply_unitary(u, generalized_bell_state(d, idx)), range(d))
            if idx == (0, 0):
                min_id = min(min_id, p)
            else:
                worst_off = max(worst_off, p)
    return worst_off < 1e-12 and min_id > 0, f"max off-(0,0) p = {worst_off:.2e}, min (0,0) p = {min_id:.3f}"


def criterion_4():
    rng = np.random.default_rng(SEED)
    ok = True
    parts = []
    for d in (2, 3, 4):
        fids, perr = [], []
        for _ in range(50):
            rep = teleport_single_qudit(d, QuditInput.random(d, rng), "physical-filter")
            fids.append(rep.fidelity)
            perr.append(abs(rep.success_probability - 1 / d**2))
        ok &= min(fids) >= 1 - 1e-9 and max(perr) <= 1e-9
        parts.append(f"d={d}: min F = {min(fids):.12f}, max |p - 1/{d * d}| = {max(perr):.1e}")
    return ok, "; ".join(parts)


def criterion_5():
    rng = np.random.default_rng(SEED)
    a = teleport_collective(4, PartitionSpec.contiguous(4, 2), QuditInput.random(6, rng), "ideal-projector")
    b = teleport_collective(3, PartitionSpec(1, (0,), (1, 2)), QuditInput.random(3, rng), "physical-filter")
    ok = (
        abs(a.success_probability - 1 / 36) <= 1e-9 and a.fidelity >= 1 - 1e-9
        and abs(b.success_probability - 1 / 9) <= 1e-9 and b.fidelity >= 1 - 1e-9
    )
    return ok, (
        f"(2,2) ideal: p = {a.success_probability:.12f}, F = {a.fidelity:.12f}; "
        f"(1,2) physical: p = {b.success_probability:.12f}, F = {b.fidelity:.12f}"
    )


def criterion_6():
    worst = 0.0
    count = 0
    for d in range(2, 6):
        lam = LambdaMatrix(tuple(range(d)))
        psi = antisymmetric_state(lam)
        for n in range(1, d):
            want = 1 / math.sqrt(math.comb(d, n))
            for side_a in itertools.combinations(range(d), n):
                side_b = tuple(p for p in range(d) if p not in side_a)
                lap = laplace_partition(lam, PartitionSpec(n, side_a, side_b)).coefficients
                svd = schmidt_spectrum(psi, side_a)
                k = math.comb(d, n)
                if len(lap) != k:
                    return False, f"laplace gave {len(lap)} terms for d={d}, n={n}"
                tail = max(svd[k:], default=0.0)
                worst = max(worst, max(abs(c - want) for c in lap), max(abs(s - want) for s in svd[:k]), tail)
                count += 1
    return worst <= 1e-10, f"{count} partitions, max spectrum error {worst:.2e}"


def criterion_7():
    ok = all(antisymmetrizer_rank(d, n) == antisym_dimension(d, n) for d in range(1, 5) for n in range(d + 1))
    ok &= all(antisym_dimension(d, 2) == d * (d - 1) // 2 for d in range(2, 9))
    return ok, "rank = C(d, n) for d <= 4; dim(d, 2) = d(d-1)/2 for d <= 8"


def _random_triple(rng):
    paths = int(rng.integers(1, 5))
    oams = int(rng.integers(1, 3))
    photons = int(rng.integers(1, 5))
    reg = Register(paths, oams)
    basis = fock_basis(reg, photons)
    picks = rng.choice(len(basis), size=min(len(basis), int(rng.integers(1, 4))), replace=False)
    coeffs = rng.standard_normal(len(picks)) + 1j * rng.standard_normal(len(picks))
    state = PureState(reg, {basis[i]: c for i, c in zip(picks, coeffs)}).normalized()
    u = ModeUnitary(random_unitary(paths, rng), range(paths))
    # half the outcomes come from the output support, so most amplitudes are nonzero
    out = apply_unitary(u, state)
    if rng.random() < 0.5 and len(out):
        keys = list(out.terms)
        outcome = keys[int(rng.integers(len(keys)))]
    else:
        outcome = basis[int(rng.integers(len(basis)))]
    return u, state, outcome, out


def criterion_8():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    nonzero = 0
    for _ in range(200):
        u, state, outcome, out = _random_triple(rng)
        oracle = sum(c * transition_amplitude(u, state.register, occ, outcome) for occ, c in state.terms.items())
        worst = max(worst, abs(out.amplitude(outcome) - oracle))
        nonzero += abs(oracle) > 1e-12
    worst_perm = 0.0
    for n in range(1, 7):
        for _ in range(5):
            m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            worst_perm = max(worst_perm, abs(permanent(m) - permanent_naive(m)))
    ok = worst <= 1e-10 and worst_perm <= 1e-12
    return ok, f"200 triples ({nonzero} nonzero), max amplitude error {worst:.2e}; inclusion-exclusion vs naive n <= 6: {worst_perm:.2e}"


def criterion_9():
    rep = prepare_antisymmetric(3)
    demo = qutrit_prep_demo()
    ok = (
        len(rep.stage_probabilities) == 2
        and abs(rep.stage_probabilities[0] - 1 / 2) <= 1e-12
        and abs(rep.stage_probabilities[1] - 1 / 3) <= 1e-12
        and abs(rep.total_probability - 1 / 6) <= 1e-12
        and rep.output_fidelity >= 1 - 1e-10
        and abs(demo.total_probability - 1 / 3) <= 1e-12
    )
    stages = ", ".join(f"{p:.12f}" for p in rep.stage_probabilities)
    return ok, f"stages ({stages}), total {rep.total_probability:.12f}, F = {rep.output_fidelity:.12f}, demo p = {demo.total_probability:.12f}"


def criterion_10():
    rows = efficiency_curve([2, 4, 6, 8])
    ok = all(r["individual_per_additional_photon"] == 0.5 for r in rows)
    ok &= all(r["collective_per_additional_photon"] == math.log2(math.comb(r["d"], r["d"] // 2)) / r["d"] for r in rows)
    ok &= all(r["collective_per_additional_photon"] > 0.5 for r in rows if r["d"] >= 4)
    rates = ", ".join(f"d={r['d']}: {r['collective_per_additional_photon']:.4f}" for r in rows)
    return ok, f"individual 0.5; collective {rates}"


CRITERIA = {
    1: ("eta-condition", criterion_1, 1.0),
    2: ("certainty of coincidence", criterion_2, 10.0),
    3: ("Bell-filter selectivity", criterion_3, 30.0),
    4: ("single-qudit teleportation law", criterion_4, 120.0),
    5: ("collective teleportation", criterion_5, 60.0),
    6: ("maximal entanglement of partitions", criterion_6, 30.0),
    7: ("dimension formulas", criterion_7, 10.0),
    8: ("oracle equivalence", criterion_8, 60.0),
    9: ("preparation recursion", criterion_9, 10.0),
    10: ("efficiency table", criterion_10, 1.0),
}


def evaluate(number: int) -> tuple[bool, str]:
    name, fn, budget = CRITERIA[number]
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    ok = ok and elapsed < budget
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {name}: {detail} [{elapsed:.2f} s / {budget:g} s]"
    RESULTS[number] = (ok, line)
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, line = evaluate(number)
    print(line)
    assert ok, line


if __name__ == "__main__":
    failures = 0
    for number in sorted(CRITERIA):
        ok, line = evaluate(number)
        print(line)
        failures += not ok
    sys.exit(1 if failures else 0)
