"""Antisymmetric multi-photon states written as determinants.

The creation-operator matrix has rows indexed by paths and columns by OAM
labels. Expanding its determinant over all permutations gives the totally
antisymmetric state; expanding it by a block of rows splits that state into a
bipartite sum of minor-determinant states.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .fock import PureState, Register, permute_paths, tensor


def permutation_sign(perm: Sequence[int]) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        for j in range(i + 1, len(p)):
            if p[i] > p[j]:
                sign = -sign
    return sign


def colex_subsets(items: Sequence[int], k: int) -> list[tuple[int, ...]]:
    """k-subsets of ``items`` in colexicographic order (by largest element first)."""
    subsets = itertools.combinations(range(len(items)), k)
    ordered = sorted(subsets, key=lambda s: tuple(reversed(s)))
    return [tuple(items[i] for i in s) for s in ordered]


@dataclass(frozen=True)
class LambdaMatrix:
    paths: tuple[int, ...]
    oams: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        oams = tuple(range(len(self.paths))) if self.oams is None else tuple(self.oams)
        object.__setattr__(self, "oams", oams)
        if len(self.paths) != len(oams):
            raise ValueError("need as many OAM labels as paths")
        if len(self.paths) < 2:
            raise ValueError("d must be at least 2")
        if len(set(self.paths)) != len(self.paths):
            raise ValueError(f"duplicate paths {self.paths}")
        if len(set(oams)) != len(oams):
            raise ValueError(f"duplicate OAM labels {oams}")

    @property
    def d(self) -> int:
        return len(self.paths)

    def default_register(self) -> Register:
        return Register(max(self.paths) + 1, max(self.oams) + 1)


def minor_state(register: Register, paths: Sequence[int], oams: Sequence[int]) -> PureState:
    """Normalized ``det(Lambda[paths, oams]) |0> / sqrt(k!)``; row order sets the sign."""
    k = len(paths)
    if k != len(oams) or k == 0:
        raise ValueError("minor must be square and nonempty")
    amp = 1 / math.sqrt(math.factorial(k))
    terms = {}
    for perm in itertools.permutations(range(k)):
        occ = register.occupation((paths[i], oams[perm[i]]) for i in range(k))
        terms[occ] = permutation_sign(perm) * amp
    return PureState(register, terms)


def antisymmetric_state(lam: LambdaMatrix, register: Register | None = None) -> PureState:
    """Totally antisymmetric d-photon state, one photon per listed path and OAM."""
    if lam.d > 7:
        raise ValueError("antisymmetric_state limited to d <= 7")
    reg = register or lam.default_register()
    return minor_state(reg, lam.paths, lam.oams)


def antisym_dimension(d: int, n: int) -> int:
    """Dimension of the antisymmetric part of n copies of a d-level space."""
    if n < 0 or n > d:
        raise ValueError(f"need 0 <= n <= d, got d={d}, n={n}")
    return math.comb(d, n)


def antisymmetrizer_rank(d: int, n: int) -> int:
    """Rank of the explicit antisymmetrizer on (C^d)^{(x) n}; brute force."""
    dim = d**n
    proj = np.zeros((dim, dim))
    basis = list(itertools.product(range(d), repeat=n))
    index = {b: i for i, b in enumerate(basis)}
    for perm in itertools.permutations(range(n)):
        s = permutation_sign(perm)
        for b in basis:
            proj[index[tuple(b[p] for p in perm)], index[b]] += s
    proj /= math.factorial(n)
    return int(np.linalg.matrix_rank(proj, tol=1e-9))


@dataclass(frozen=True)
class PartitionSpec:
    n: int
    side_a_paths: tuple[int, ...]
    side_b_paths: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "side_a_paths", tuple(self.side_a_paths))
        object.__setattr__(self, "side_b_paths", tuple(self.side_b_paths))
        if len(self.side_a_paths) != self.n or self.n < 1 or not self.side_b_paths:
            raise ValueError(f"invalid partition: n={self.n}, A={self.side_a_paths}, B={self.side_b_paths}")
        if set(self.side_a_paths) & set(self.side_b_paths):
            raise ValueError("partition sides overlap")

    @property
    def d(self) -> int:
        return len(self.side_a_paths) + len(self.side_b_paths)

    @classmethod
    def contiguous(cls, d: int, n: int) -> PartitionSpec:
        """Side A on paths ``0..n-1``, side B on ``n..d-1``."""
        return cls(n, tuple(range(n)), tuple(range(n, d)))


@dataclass
class SchmidtDecomposition:
    """Bipartite expansion ``sum_i signs[i] * coefficients[i] * |A_i>|B_i>``.

    Side-A states live on ``len(side_a_paths)`` local paths (local ``i`` is
    ``side_a_paths[i]``), side-B states likewise.
    """

    coefficients: list[float]
    side_a_states: list[PureState]
    side_b_states: list[PureState]
    signs: list[int]
    oam_sets: list[tuple[int, ...]]

    def reconstruct(self) -> PureState:
        """The full state on side-A paths followed by side-B paths."""
        total = None
        for c, s, a, b in zip(self.coefficients, self.signs, self.side_a_states, self.side_b_states):
            term = tensor(a, b).scaled(s * c)
            total = term if total is None else total + term
        return total


def laplace_partition(lam: LambdaMatrix, part: PartitionSpec, register: Register | None = None) -> SchmidtDecomposition:
    """Split the antisymmetric state along ``part`` by Laplace expansion.

    With the rows reordered as (side A, side B), the expansion over column
    subsets ``C`` of size n reads
    ``det = eps * sum_C (-1)^(0+..+n-1 + sum C) det(A_C) det(B_C')``,
    where ``eps`` is the sign of the row reordering.
    """
    if set(part.side_a_paths) | set(part.side_b_paths) != set(lam.paths) or part.d != lam.d:
        raise ValueError("partition does not cover the matrix paths")
    reg = register or lam.default_register()
    d, n = lam.d, part.n
    row_pos = {p: i for i, p in enumerate(lam.paths)}
    eps = permutation_sign([row_pos[p] for p in part.side_a_paths + part.side_b_paths])
    reg_a = Register(n, reg.oams)
    reg_b = Register(d - n, reg.oams)
    local_a = range(n)
    local_b = range(d - n)
    n_terms = math.comb(d, n)
    coeff = 1 / math.sqrt(n_terms)

    col_pos = {l: i for i, l in enumerate(lam.oams)}
    a_states, b_states, signs, sets = [], [], [], []
    for cols in colex_subsets(lam.oams, n):
        cols = tuple(sorted(cols, key=col_pos.__getitem__))
        rest = tuple(l for l in lam.oams if l not in cols)
        exponent = n * (n - 1) // 2 + sum(col_pos[l] for l in cols)
        signs.append(eps * (-1) ** exponent)
        a_states.append(minor_state(reg_a, local_a, cols))
        b_states.append(minor_state(reg_b, local_b, rest))
        sets.append(cols)
    return SchmidtDecomposition([coeff] * n_terms, a_states, b_states, signs, sets)


def schmidt_spectrum(state: PureState, side_a_paths: Sequence[int]) -> list[float]:
    """Singular values of the bipartite coefficient matrix, descending."""
    reg = state.register
    d = reg.oams
    a_paths = list(side_a_paths)
    b_paths = [p for p in range(reg.paths) if p not in set(a_paths)]
    if not a_paths or not b_paths:
        raise ValueError("bipartition must leave paths on both sides")
    a_idx = [p * d + l for p in a_paths for l in range(d)]
    b_idx = [p * d + l for p in b_paths for l in range(d)]
    rows: dict[tuple, int] = {}
    cols: dict[tuple, int] = {}
    entries = []
    for occ, amp in state.terms.items():
        ka = tuple(occ[i] for i in a_idx)
        kb = tuple(occ[i] for i in b_idx)
        entries.append((rows.setdefault(ka, len(rows)), cols.setdefault(kb, len(cols)), amp))
    mat = np.zeros((len(rows), len(cols)), dtype=complex)
    for i, j, amp in entries:
        mat[i, j] += amp
    return sorted(np.linalg.svd(mat, compute_uv=False).tolist(), reverse=True)


def transpose_paths(state: PureState, p: int, q: int) -> PureState:
    """Swap the contents of two paths."""
    order = list(range(state.register.paths))
    order[p], order[q] = order[q], order[p]
    return permute_paths(state, order)
