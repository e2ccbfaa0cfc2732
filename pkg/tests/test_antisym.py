import itertools
import math

import numpy as np
import pytest

from qudit_teleport.antisym import (
    LambdaMatrix,
    PartitionSpec,
    antisym_dimension,
    antisymmetric_state,
    antisymmetrizer_rank,
    colex_subsets,
    laplace_partition,
    permutation_sign,
    schmidt_spectrum,
    transpose_paths,
)
from qudit_teleport.fock import Register, inner_product, make_state, permute_paths, single_photon, tensor


def test_two_photon_singlet():
    reg = Register(2, 2)
    psi = antisymmetric_state(LambdaMatrix((0, 1)), reg)
    h = 1 / math.sqrt(2)
    # |12> - |21>: path 0 OAM 0 with path 1 OAM 1, minus the swap
    assert psi.terms == pytest.approx({(1, 0, 0, 1): h, (0, 1, 1, 0): -h})


def test_three_photon_signs_are_parities():
    reg = Register(3, 3)
    psi = antisymmetric_state(LambdaMatrix((0, 1, 2)), reg)
    assert len(psi) == 6
    for perm in itertools.permutations(range(3)):
        occ = reg.occupation((j, perm[j]) for j in range(3))
        assert psi.amplitude(occ) == pytest.approx(permutation_sign(perm) / math.sqrt(6))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_one_photon_per_path_and_label(d):
    psi = antisymmetric_state(LambdaMatrix(tuple(range(d))))
    assert psi.norm_sq == pytest.approx(1)
    assert len(psi) == math.factorial(d)
    for occ in psi.terms:
        grid = np.array(occ).reshape(d, d)
        assert (grid.sum(axis=0) == 1).all() and (grid.sum(axis=1) == 1).all()


@pytest.mark.parametrize("d", [2, 3, 4])
def test_path_transposition_flips_sign(d):
    psi = antisymmetric_state(LambdaMatrix(tuple(range(d))))
    for p, q in itertools.combinations(range(d), 2):
        swapped = transpose_paths(psi, p, q)
        assert swapped.terms == pytest.approx({k: -v for k, v in psi.terms.items()})


def test_row_swap_in_lambda():
    a = antisymmetric_state(LambdaMatrix((0, 1, 2)))
    b = antisymmetric_state(LambdaMatrix((1, 0, 2)))
    assert b.terms == pytest.approx({k: -v for k, v in a.terms.items()})


@pytest.mark.parametrize("paths, oams", [((0, 0), None), ((0, 1), (1, 1)), ((0,), None), ((0, 1), (0,))])
def test_lambda_validation(paths, oams):
    with pytest.raises(ValueError):
        LambdaMatrix(paths, oams)


def test_dimension_values():
    assert antisym_dimension(2, 2) == 1
    for d in range(2, 9):
        assert antisym_dimension(d, 2) == d * (d - 1) // 2
        assert antisym_dimension(d, d) == 1
    with pytest.raises(ValueError):
        antisym_dimension(3, 4)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_dimension_matches_antisymmetrizer_rank(d):
    for n in range(d + 1):
        assert antisymmetrizer_rank(d, n) == antisym_dimension(d, n)


def test_colex_order():
    assert colex_subsets((0, 1, 2, 3), 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_singlet_partition():
    sd = laplace_partition(LambdaMatrix((0, 1)), PartitionSpec.contiguous(2, 1))
    np.testing.assert_allclose(sd.coefficients, [1 / math.sqrt(2)] * 2)


def test_first_row_partition_d3():
    lam = LambdaMatrix((0, 1, 2))
    sd = laplace_partition(lam, PartitionSpec(2, (1, 2), (0,)))
    np.testing.assert_allclose(sd.coefficients, [1 / math.sqrt(3)] * 3)
    for b in sd.side_b_states:
        assert len(b) == 1 and sum(next(iter(b.terms))) == 1


def test_two_two_partition_d4():
    sd = laplace_partition(LambdaMatrix((0, 1, 2, 3)), PartitionSpec.contiguous(4, 2))
    np.testing.assert_allclose(sd.coefficients, [1 / math.sqrt(6)] * 6)
    spectrum = schmidt_spectrum(antisymmetric_state(LambdaMatrix((0, 1, 2, 3))), [0, 1])
    np.testing.assert_allclose(spectrum[:6], [1 / math.sqrt(6)] * 6, atol=1e-10)
    assert max(spectrum[6:], default=0) < 1e-10


def _orthonormal(states):
    gram = np.array([[inner_product(a, b) for b in states] for a in states])
    return np.max(np.abs(gram - np.eye(len(states))))


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_laplace_reconstructs_every_partition(d):
    lam = LambdaMatrix(tuple(range(d)))
    psi = antisymmetric_state(lam)
    for n in range(1, d):
        for side_a in itertools.combinations(range(d), n):
            side_b = tuple(p for p in range(d) if p not in side_a)
            # reversed side A exercises the row-reordering sign
            for a in (side_a, side_a[::-1]):
                sd = laplace_partition(lam, PartitionSpec(n, a, side_b))
                assert len(sd.coefficients) == math.comb(d, n)
                assert sum(c * c for c in sd.coefficients) == pytest.approx(1, abs=1e-10)
                assert _orthonormal(sd.side_a_states) < 1e-10
                assert _orthonormal(sd.side_b_states) < 1e-10
                target = permute_paths(psi, list(a) + list(side_b))
                rebuilt = sd.reconstruct()
                for k in set(target.terms) | set(rebuilt.terms):
                    assert abs(target.amplitude(k) - rebuilt.amplitude(k)) < 1e-12


def test_partition_validation():
    with pytest.raises(ValueError):
        PartitionSpec(2, (0,), (1, 2))
    with pytest.raises(ValueError):
        PartitionSpec(1, (0,), (0, 1))
    with pytest.raises(ValueError):
        laplace_partition(LambdaMatrix((0, 1, 2)), PartitionSpec(1, (0,), (1, 3)))


def test_schmidt_spectrum_product_state():
    a = single_photon(Register(1, 2), [0.6, 0.8])
    spec = schmidt_spectrum(tensor(a, a), [0])
    assert spec[0] == pytest.approx(1)
    assert all(abs(s) < 1e-12 for s in spec[1:])
    with pytest.raises(ValueError):
        schmidt_spectrum(tensor(a, a), [0, 1])


def test_schmidt_first_row_d3():
    spec = schmidt_spectrum(antisymmetric_state(LambdaMatrix((0, 1, 2))), [0])
    np.testing.assert_allclose(spec, [1 / math.sqrt(3)] * 3, atol=1e-10)


def test_minor_sets_follow_colex_order():
    sd = laplace_partition(LambdaMatrix((0, 1, 2, 3)), PartitionSpec.contiguous(4, 2))
    assert sd.oam_sets == colex_subsets((0, 1, 2, 3), 2)


def test_antisymmetric_size_limit():
    with pytest.raises(ValueError):
        antisymmetric_state(LambdaMatrix(tuple(range(8))))


def test_non_antisymmetric_state_is_caught_by_swap():
    reg = Register(2, 2)
    sym = make_state(reg, [((1, 0, 0, 1), 1), ((0, 1, 1, 0), 1)]).normalized()
    assert transpose_paths(sym, 0, 1).terms == pytest.approx(sym.terms)
