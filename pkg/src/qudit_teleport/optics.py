"""Passive linear optics on path modes.

Unitaries act on path indices only; OAM labels ride along unchanged. The
creation operator of path ``j`` maps as ``a_j^dag -> sum_k U[j, k] a_k^dag``,
i.e. rows of ``U`` are indexed by input paths. With this convention a setup
``U`` sends the creation-operator matrix (rows = paths) to ``U @ Lambda``, and
``compose(u, v) = u @ v`` describes ``u`` followed by ``v``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .fock import Occupation, PureState, Register

UNITARY_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class ModeUnitary:
    matrix: np.ndarray
    acted_paths: tuple[int, ...]

    def __post_init__(self):
        m = np.array(self.matrix, dtype=complex)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "acted_paths", tuple(int(p) for p in self.acted_paths))
        n = len(self.acted_paths)
        if m.shape != (n, n):
            raise ValueError(f"matrix shape {m.shape} does not match {n} acted paths")
        if len(set(self.acted_paths)) != n:
            raise ValueError(f"acted paths not distinct: {self.acted_paths}")
        err = np.max(np.abs(m.conj().T @ m - np.eye(n))) if n else 0.0
        if err > UNITARY_TOL:
            raise ValueError(f"matrix is not unitary (max |U^dag U - I| = {err:.3g})")

    @property
    def dim(self) -> int:
        return len(self.acted_paths)

    def on_paths(self, paths: Sequence[int]) -> ModeUnitary:
        """Same matrix, wired to different global paths."""
        return ModeUnitary(self.matrix, tuple(paths))

    def dagger(self) -> ModeUnitary:
        return ModeUnitary(self.matrix.conj().T, self.acted_paths)

    def full(self, total_paths: int) -> np.ndarray:
        """Embed into a ``total_paths`` identity."""
        if max(self.acted_paths, default=-1) >= total_paths:
            raise ValueError("acted path outside the register")
        out = np.eye(total_paths, dtype=complex)
        idx = np.array(self.acted_paths)
        out[np.ix_(idx, idx)] = self.matrix
        return out


@dataclass(frozen=True)
class BeamSplitterSpec:
    path_a: int
    path_b: int
    transmissivity: float

    def __post_init__(self):
        if self.path_a == self.path_b:
            raise ValueError("beam splitter needs two distinct paths")
        if not 0 < self.transmissivity < 1:
            raise ValueError(f"transmissivity {self.transmissivity} outside (0, 1)")


def beam_splitter(spec: BeamSplitterSpec, total_paths: int) -> ModeUnitary:
    """Real beam splitter ``[[sqrt(t), -sqrt(1-t)], [sqrt(1-t), sqrt(t)]]`` on (a, b)."""
    if not (0 <= spec.path_a < total_paths and 0 <= spec.path_b < total_paths):
        raise ValueError("beam splitter path outside register")
    t = spec.transmissivity
    m = np.eye(total_paths)
    a, b = spec.path_a, spec.path_b
    m[a, a] = m[b, b] = math.sqrt(t)
    m[a, b] = -math.sqrt(1 - t)
    m[b, a] = math.sqrt(1 - t)
    return ModeUnitary(m, tuple(range(total_paths)))


def compose(u: ModeUnitary, v: ModeUnitary) -> ModeUnitary:
    """Matrix product ``u @ v``: the setup ``u`` followed by ``v``.

    Unitaries on different path sets are first embedded on the union of both.
    """
    if u.acted_paths == v.acted_paths:
        return ModeUnitary(u.matrix @ v.matrix, u.acted_paths)
    paths = tuple(sorted(set(u.acted_paths) | set(v.acted_paths)))
    return ModeUnitary(_embed_on(u, paths) @ _embed_on(v, paths), paths)


def _embed_on(u: ModeUnitary, paths: tuple[int, ...]) -> np.ndarray:
    pos = {p: i for i, p in enumerate(paths)}
    out = np.eye(len(paths), dtype=complex)
    idx = [pos[p] for p in u.acted_paths]
    out[np.ix_(idx, idx)] = u.matrix
    return out


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR with phase correction."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / math.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def apply_unitary(u: ModeUnitary, state: PureState) -> PureState:
    """Send ``state`` through ``u``.

    Each term is rewritten as a monomial in creation operators, the acted
    operators are substituted and the polynomial expanded over the vacuum.
    Terms sharing the same acted sub-occupation reuse one expansion.
    """
    reg = state.register
    d = reg.oams
    paths = u.acted_paths
    if any(not 0 <= p < reg.paths for p in paths):
        raise ValueError(f"unitary acts on paths {paths} outside register with {reg.paths} paths")
    if not state.number_definite:
        raise ValueError("apply_unitary needs a number-definite state")
    acted_idx = [p * d + l for p in paths for l in range(d)]
    matrix = u.matrix
    cache: dict[Occupation, dict[Occupation, complex]] = {}

    out: dict[Occupation, complex] = {}
    for occ, amp in state.terms.items():
        sub = tuple(occ[i] for i in acted_idx)
        expanded = cache.get(sub)
        if expanded is None:
            expanded = _expand(sub, matrix, d)
            cache[sub] = expanded
        base = list(occ)
        for i in acted_idx:
            base[i] = 0
        for new_sub, c in expanded.items():
            for i, n in zip(acted_idx, new_sub):
                base[i] = n
            key = tuple(base)
            out[key] = out.get(key, 0j) + amp * c
    return PureState(reg, out)


def _expand(sub: Occupation, matrix: np.ndarray, d: int) -> dict[Occupation, complex]:
    """Fock amplitudes of ``prod (a_jl^dag)^n / sqrt(n!) |0>`` after substitution."""
    k = matrix.shape[0]
    poly: dict[Occupation, complex] = {(0,) * (k * d): 1.0 + 0j}
    norm_in = 1.0
    for j in range(k):
        row = [(i, complex(matrix[j, i])) for i in range(k) if matrix[j, i] != 0]
        for l in range(d):
            n = sub[j * d + l]
            if n == 0:
                continue
            norm_in *= math.factorial(n)
            for _ in range(n):
                nxt: dict[Occupation, complex] = {}
                for mono, c in poly.items():
                    for i, w in row:
                        m = list(mono)
                        m[i * d + l] += 1
                        m = tuple(m)
                        nxt[m] = nxt.get(m, 0j) + c * w
                poly = nxt
    # (a^dag)^m |0> = sqrt(m!) |m>
    out = {}
    for mono, c in poly.items():
        f = math.prod(math.factorial(m) for m in mono if m > 1)
        out[mono] = c * math.sqrt(f / norm_in)
    return out


def transition_amplitude(u: ModeUnitary, register: Register, inp: Sequence[int], out: Sequence[int]) -> complex:
    """<out| U |inp> from matrix permanents, one factor per OAM label."""
    d = register.oams
    if len(inp) != register.modes or len(out) != register.modes:
        raise ValueError("occupation vectors do not fit the register")
    full = u.full(register.paths)
    amp = 1.0 + 0j
    for l in range(d):
        s = [inp[p * d + l] for p in range(register.paths)]
        t = [out[p * d + l] for p in range(register.paths)]
        if sum(s) != sum(t):
            return 0j
        if sum(s) == 0:
            continue
        rows = [p for p, n in enumerate(s) for _ in range(n)]
        cols = [p for p, n in enumerate(t) for _ in range(n)]
        sub = full[np.ix_(rows, cols)]
        norm = math.prod(math.factorial(n) for n in s) * math.prod(math.factorial(n) for n in t)
        amp *= permanent(sub) / math.sqrt(norm)
    return amp


def permanent(m) -> complex:
    """Glynn's inclusion-exclusion formula over Gray-coded sign vectors, O(2^n n).

    Same cost as Ryser's formula but with far less cancellation error on
    matrices with O(1) entries; the terms are accumulated with ``math.fsum``.
    """
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"permanent needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n == 0:
        return 1.0 + 0j
    # column sums of diag(delta) @ a, with delta_0 = +1 fixed
    sums = a.sum(axis=0)
    delta = np.ones(n)
    sign = 1
    first = np.prod(sums)
    re, im = [first.real], [first.imag]
    for k in range(1, 2 ** (n - 1)):
        j = (k & -k).bit_length()
        delta[j] = -delta[j]
        sums = sums + 2 * delta[j] * a[j]
        sign = -sign
        term = sign * np.prod(sums)
        re.append(term.real)
        im.append(term.imag)
    return complex(math.fsum(re), math.fsum(im)) / 2 ** (n - 1)


def permanent_naive(m) -> complex:
    """Sum over all n! permutations; the reference for small matrices."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"permanent needs a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > 8:
        raise ValueError("naive permanent limited to n <= 8")
    return complex(sum(math.prod(a[i, p[i]] for i in range(n)) for p in itertools.permutations(range(n))))


@lru_cache(maxsize=None)
def _fock_basis(photons: int, modes: int) -> tuple[Occupation, ...]:
    if modes == 0:
        return ((),) if photons == 0 else ()
    out = []
    for first in range(photons, -1, -1):
        for rest in _fock_basis(photons - first, modes - 1):
            out.append((first,) + rest)
    return tuple(out)


def fock_basis(register: Register, photons: int) -> tuple[Occupation, ...]:
    """Every occupation vector with ``photons`` photons on the register."""
    return _fock_basis(photons, register.modes)
