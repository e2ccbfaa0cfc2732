"""Recursive beam-splitter Bell filter and coincidence post-selection."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .antisym import minor_state
from .fock import PureState, Register, embed
from .optics import BeamSplitterSpec, ModeUnitary, beam_splitter

ETA_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class BellFilterSpec:
    d: int
    unitary: ModeUnitary
    transmissivities: tuple[float, ...]


class GeneralizedBellIndex(NamedTuple):
    m1: int
    m2: int


def _bell_matrix(d: int) -> np.ndarray:
    s = beam_splitter(BeamSplitterSpec(0, d - 1, (d - 1) / d), d).matrix
    if d == 2:
        return s
    rest = np.eye(d, dtype=complex)
    rest[1:, 1:] = _bell_matrix(d - 1)
    return s @ rest


@lru_cache(maxsize=None)
def bell_filter_unitary(d: int) -> BellFilterSpec:
    """``U_d = S_d @ diag(1, U_{d-1})`` with ``U_2 = S_2``.

    ``S_d`` is the ``(d-1)/d`` beam splitter between the first and last port.
    The last port is the one that takes the extra single photon.
    """
    if not 2 <= d <= 7:
        raise ValueError(f"Bell filter supports 2 <= d <= 7, got {d}")
    ts = tuple((k - 1) / k for k in range(d, 1, -1))
    return BellFilterSpec(d, ModeUnitary(_bell_matrix(d), tuple(range(d))), ts)


def cofactor(m, i: int, j: int) -> complex:
    a = np.asarray(m.matrix if isinstance(m, ModeUnitary) else m, dtype=complex)
    n = a.shape[0]
    if a.ndim != 2 or a.shape[1] != n or n < 2:
        raise ValueError("cofactor needs a square matrix of size >= 2")
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"({i}, {j}) outside a {n}x{n} matrix")
    minor = np.delete(np.delete(a, i, axis=0), j, axis=1)
    return (-1) ** (i + j) * complex(np.linalg.det(minor))


def cofactor_matrix(m) -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    n = a.shape[0]
    return np.array([[cofactor(a, i, j) for j in range(n)] for i in range(n)])


def check_sufficiency(u) -> tuple[bool, np.ndarray]:
    """``eta_k = U[-1, k] * Co(U)[-1, k]`` for every k; pass iff all equal."""
    a = np.asarray(u.matrix if isinstance(u, ModeUnitary) else u, dtype=complex)
    d = a.shape[0]
    eta = np.array([a[d - 1, k] * cofactor(a, d - 1, k) for k in range(d)])
    return bool(np.max(np.abs(eta - eta[0])) <= ETA_TOL), eta


def generalized_bell_state(
    d: int,
    idx: GeneralizedBellIndex | tuple[int, int],
    paths: Sequence[int] | None = None,
    register: Register | None = None,
) -> PureState:
    """Normalized ``sum_n omega^(n m1) |A_n> |B_(n+m2)> / sqrt(d)``.

    The first ``d-1`` paths carry ``|A_n>``, the determinant state of all OAM
    labels except ``n``; the last path carries ``|B_i>``, a single photon in
    OAM ``i`` with the cofactor sign ``(-1)^(d-1+i)``. Index ``(0, 0)`` is then
    exactly the antisymmetric state on these paths.
    """
    m1, m2 = idx
    if not (0 <= m1 < d and 0 <= m2 < d):
        raise ValueError(f"Bell index {tuple(idx)} outside [0, {d})")
    paths = tuple(range(d)) if paths is None else tuple(paths)
    if len(paths) != d:
        raise ValueError(f"need {d} paths, got {len(paths)}")
    reg = register or Register(max(paths) + 1, d)
    local = Register(d, reg.oams)
    a_rows = tuple(range(d - 1))
    terms: dict = {}
    for n in range(d):
        a = minor_state(local, a_rows, [l for l in range(d) if l != n])
        b = (n + m2) % d
        weight = cmath.exp(2j * math.pi * n * m1 / d) * (-1) ** (d - 1 + b) / math.sqrt(d)
        for occ, amp in a.terms.items():
            occ = list(occ)
            occ[(d - 1) * local.oams + b] += 1
            occ = tuple(occ)
            terms[occ] = terms.get(occ, 0j) + weight * amp
    state = PureState(local, terms)
    if list(paths) == list(range(reg.paths)):
        return state
    return embed(state, reg, paths)


def coincidence_project(state: PureState, watch_paths: Iterable[int]) -> tuple[PureState, float]:
    """Keep terms with exactly one photon, of any OAM, on every watched path.

    Returns the unnormalized kept state and its weight relative to the input.
    """
    reg = state.register
    d = reg.oams
    watch = list(watch_paths)
    if any(not 0 <= p < reg.paths for p in watch):
        raise ValueError(f"watched paths {watch} outside register")
    kept = {occ: amp for occ, amp in state.terms.items() if all(sum(occ[p * d:(p + 1) * d]) == 1 for p in watch)}
    out = PureState(reg, kept)
    prob = out.norm_sq / state.norm_sq if state.norm_sq > 0 else 0.0
    return out, prob
