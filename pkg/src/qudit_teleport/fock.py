"""Sparse multimode bosonic Fock states.

A register holds ``paths * oams`` modes, ordered path-major and OAM-minor, so
mode ``(j, l)`` sits at flat index ``j * oams + l``. States are sparse maps
from occupation tuples to complex amplitudes. Nothing is normalized behind the
caller's back: after a projection, ``norm_sq`` is the event probability.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

PRUNE_TOL = 1e-14

Occupation = tuple[int, ...]


class ModeId(NamedTuple):
    path: int
    oam: int


@dataclass(frozen=True)
class Register:
    paths: int
    oams: int

    def __post_init__(self):
        if self.paths < 0 or self.oams < 1:
            raise ValueError(f"invalid register {self.paths}x{self.oams}")

    @property
    def modes(self) -> int:
        return self.paths * self.oams

    def index(self, mode: ModeId | tuple[int, int]) -> int:
        path, oam = mode
        if not (0 <= path < self.paths and 0 <= oam < self.oams):
            raise ValueError(f"mode {tuple(mode)} outside register {self.paths}x{self.oams}")
        return path * self.oams + oam

    def occupation(self, modes: Iterable[ModeId | tuple[int, int]]) -> Occupation:
        """Occupation vector with one photon per listed mode (repeats stack)."""
        counts = [0] * self.modes
        for m in modes:
            counts[self.index(m)] += 1
        return tuple(counts)

    def path_counts(self, occ: Occupation) -> list[int]:
        d = self.oams
        return [sum(occ[j * d:(j + 1) * d]) for j in range(self.paths)]


class PureState:
    """Immutable sparse superposition of Fock basis vectors.

    Build instances with :func:`make_state`; the constructor trusts its input
    and only prunes and sorts.
    """

    __slots__ = ("register", "terms", "norm_sq")

    def __init__(self, register: Register, terms: dict[Occupation, complex]):
        kept = {k: complex(v) for k, v in terms.items() if abs(v) > PRUNE_TOL}
        self.register = register
        self.terms = dict(sorted(kept.items(), key=lambda kv: kv[0]))
        self.norm_sq = math.fsum(abs(v) ** 2 for v in self.terms.values())

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"PureState({self.register.paths}x{self.register.oams}, {len(self)} terms, norm_sq={self.norm_sq:.6g})"

    def amplitude(self, occ: Sequence[int]) -> complex:
        return self.terms.get(tuple(occ), 0j)

    @property
    def photon_numbers(self) -> set[int]:
        return {sum(k) for k in self.terms}

    @property
    def number_definite(self) -> bool:
        return len(self.photon_numbers) <= 1

    def scaled(self, factor: complex) -> PureState:
        return PureState(self.register, {k: v * factor for k, v in self.terms.items()})

    def normalized(self) -> PureState:
        if self.norm_sq == 0:
            raise ValueError("cannot normalize the zero state")
        return self.scaled(1 / math.sqrt(self.norm_sq))

    def __add__(self, other: PureState) -> PureState:
        _same_register(self, other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0j) + v
        return PureState(self.register, out)

    def __sub__(self, other: PureState) -> PureState:
        return self + other.scaled(-1)

    def dump(self) -> str:
        """One line per term: ``occupations... : re im`` in canonical order."""
        lines = []
        for occ, amp in self.terms.items():
            occ_s = " ".join(str(n) for n in occ)
            lines.append(f"{occ_s} : {amp.real!r} {amp.imag!r}")
        return "\n".join(lines)


def _same_register(a: PureState, b: PureState):
    if a.register != b.register:
        raise ValueError(f"register mismatch: {a.register} vs {b.register}")


def make_state(register: Register, terms: Iterable[tuple[Sequence[int], complex]]) -> PureState:
    """Build a state from ``(occupation, amplitude)`` pairs.

    Duplicate occupations are summed, amplitudes below ``PRUNE_TOL`` dropped.
    The result is not normalized.
    """
    merged: dict[Occupation, complex] = {}
    for occ, amp in terms:
        occ = tuple(int(n) for n in occ)
        if len(occ) != register.modes:
            raise ValueError(f"occupation of length {len(occ)} does not fit {register.modes} modes")
        if any(n < 0 for n in occ):
            raise ValueError(f"negative occupation {occ}")
        merged[occ] = merged.get(occ, 0j) + complex(amp)
    state = PureState(register, merged)
    if not state.terms:
        raise ValueError("state has no nonzero amplitude")
    return state


def vacuum(register: Register) -> PureState:
    return PureState(register, {(0,) * register.modes: 1.0})


def zero_state(register: Register) -> PureState:
    return PureState(register, {})


def single_photon(register: Register, amplitudes: Sequence[complex], path: int = 0) -> PureState:
    """One photon on ``path`` in the OAM superposition ``amplitudes``."""
    if len(amplitudes) != register.oams:
        raise ValueError("need one amplitude per OAM label")
    terms = {}
    for l, a in enumerate(amplitudes):
        terms[register.occupation([(path, l)])] = a
    return PureState(register, terms)


def add_photon(state: PureState, path: int, oam: int) -> PureState:
    """Apply the creation operator of mode ``(path, oam)``."""
    idx = state.register.index((path, oam))
    out = {}
    for occ, amp in state.terms.items():
        new = list(occ)
        new[idx] += 1
        out[tuple(new)] = amp * math.sqrt(new[idx])
    return PureState(state.register, out)


def inner_product(a: PureState, b: PureState) -> complex:
    """<a|b>, conjugate-linear in ``a``."""
    _same_register(a, b)
    small, large = (a, b) if len(a) <= len(b) else (b, a)
    parts = []
    for occ in small.terms:
        if occ in large.terms:
            parts.append(a.terms[occ].conjugate() * b.terms[occ])
    return complex(math.fsum(p.real for p in parts), math.fsum(p.imag for p in parts))


def tensor(a: PureState, b: PureState) -> PureState:
    """Product state; ``b``'s paths are appended after ``a``'s."""
    if a.register.oams != b.register.oams:
        raise ValueError("registers use different OAM alphabets")
    reg = Register(a.register.paths + b.register.paths, a.register.oams)
    out = {}
    for oa, va in a.terms.items():
        for ob, vb in b.terms.items():
            out[oa + ob] = va * vb
    return PureState(reg, out)


def _path_slices(register: Register, paths: Sequence[int]):
    d = register.oams
    return [slice(p * d, (p + 1) * d) for p in paths]


def _split(occ: Occupation, register: Register, paths: Sequence[int], rest: Sequence[int]):
    sub = tuple(n for s in _path_slices(register, paths) for n in occ[s])
    other = tuple(n for s in _path_slices(register, rest) for n in occ[s])
    return sub, other


def _complement(register: Register, paths: Sequence[int]) -> list[int]:
    chosen = set(paths)
    if len(chosen) != len(paths):
        raise ValueError(f"repeated path in {list(paths)}")
    for p in chosen:
        if not 0 <= p < register.paths:
            raise ValueError(f"path {p} outside register with {register.paths} paths")
    return [p for p in range(register.paths) if p not in chosen]


def permute_paths(state: PureState, order: Sequence[int]) -> PureState:
    """New state whose path ``i`` is the old path ``order[i]``."""
    reg = state.register
    if sorted(order) != list(range(reg.paths)):
        raise ValueError(f"{list(order)} is not a permutation of the paths")
    slices = _path_slices(reg, order)
    return PureState(reg, {tuple(n for s in slices for n in occ[s]): v for occ, v in state.terms.items()})


def embed(state: PureState, register: Register, paths: Sequence[int]) -> PureState:
    """Place ``state`` on the listed paths of a larger, otherwise empty register."""
    if len(paths) != state.register.paths or register.oams != state.register.oams:
        raise ValueError("target paths do not match the state's register")
    _complement(register, paths)
    d = register.oams
    out = {}
    for occ, v in state.terms.items():
        full = [0] * register.modes
        for i, p in enumerate(paths):
            full[p * d:(p + 1) * d] = occ[i * d:(i + 1) * d]
        out[tuple(full)] = v
    return PureState(register, out)


def contract(phi: PureState, state: PureState, paths: Sequence[int]) -> PureState:
    """Partial inner product ``<phi|_paths |state>``.

    ``phi`` lives on ``len(paths)`` paths, local path ``i`` matching
    ``paths[i]``. The result lives on the remaining paths in ascending order.
    """
    reg = state.register
    rest = _complement(reg, paths)
    if phi.register != Register(len(paths), reg.oams):
        raise ValueError("phi register does not match the contracted paths")
    out: dict[Occupation, complex] = {}
    for occ, v in state.terms.items():
        sub, other = _split(occ, reg, paths, rest)
        w = phi.terms.get(sub)
        if w is not None:
            out[other] = out.get(other, 0j) + w.conjugate() * v
    return PureState(Register(len(rest), reg.oams), out)


def project(state: PureState, phi: PureState, paths: Sequence[int]) -> PureState:
    """Apply ``|phi><phi|`` on ``paths`` (identity elsewhere); result unnormalized."""
    reg = state.register
    rest = _complement(reg, paths)
    remainder = contract(phi, state, paths)
    both = tensor(phi, remainder)
    return permute_paths(both, _inverse(list(paths) + rest))


def _inverse(order: Sequence[int]) -> list[int]:
    inv = [0] * len(order)
    for i, p in enumerate(order):
        inv[p] = i
    return inv


@dataclass(frozen=True)
class DensityOperator:
    """Reduced density matrix over an explicit list of occupation vectors."""

    register: Register
    basis: tuple[Occupation, ...]
    matrix: np.ndarray

    def __post_init__(self):
        n = len(self.basis)
        if self.matrix.shape != (n, n):
            raise ValueError("matrix shape does not match basis")
        if n and np.max(np.abs(self.matrix - self.matrix.conj().T)) > 1e-10:
            raise ValueError("density matrix is not Hermitian")

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    @property
    def purity(self) -> float:
        return float(np.real(np.trace(self.matrix @ self.matrix))) / self.trace**2

    def eigenvalues(self) -> np.ndarray:
        """Eigenvalues in descending order."""
        return np.linalg.eigvalsh(self.matrix)[::-1]

    def normalized(self) -> DensityOperator:
        tr = self.trace
        if tr <= 0:
            raise ValueError("cannot normalize a zero-trace operator")
        return DensityOperator(self.register, self.basis, self.matrix / tr)

    def index(self) -> dict[Occupation, int]:
        return {b: i for i, b in enumerate(self.basis)}


def partial_trace(state: PureState, keep_paths: Iterable[int]) -> DensityOperator:
    """Trace out every path not in ``keep_paths``.

    Kept paths are relabelled ``0..k-1`` in ascending order of their original
    index. The trace of the result equals ``state.norm_sq``.
    """
    reg = state.register
    keep = sorted(set(keep_paths))
    if not keep or len(keep) >= reg.paths:
        raise ValueError("keep_paths must be a nonempty proper subset of the paths")
    rest = _complement(reg, keep)

    # group by traced-out part: rho = sum_t |v_t><v_t|
    groups: dict[Occupation, dict[Occupation, complex]] = {}
    kept_basis: dict[Occupation, None] = {}
    for occ, v in state.terms.items():
        sub, other = _split(occ, reg, keep, rest)
        groups.setdefault(other, {})[sub] = v
        kept_basis[sub] = None
    basis = tuple(sorted(kept_basis))
    pos = {b: i for i, b in enumerate(basis)}
    rho = np.zeros((len(basis), len(basis)), dtype=complex)
    for _, vec in sorted(groups.items(), key=lambda kv: kv[0]):
        v = np.zeros(len(basis), dtype=complex)
        for b, amp in vec.items():
            v[pos[b]] = amp
        rho += np.outer(v, v.conj())
    rho = (rho + rho.conj().T) / 2
    return DensityOperator(Register(len(keep), reg.oams), basis, rho)


def fidelity(rho: DensityOperator, chi: PureState) -> float:
    """<chi|rho|chi> for normalized ``rho`` and ``chi``."""
    if rho.register != chi.register:
        raise ValueError(f"basis mismatch: {rho.register} vs {chi.register}")
    if abs(rho.trace - 1) > 1e-8 or abs(chi.norm_sq - 1) > 1e-8:
        raise ValueError("fidelity needs a normalized density operator and state")
    pos = rho.index()
    v = np.zeros(len(rho.basis), dtype=complex)
    for occ, amp in chi.terms.items():
        if occ in pos:
            v[pos[occ]] = amp
    return float(np.real(v.conj() @ rho.matrix @ v))


def state_fidelity(a: PureState, b: PureState) -> float:
    """|<a|b>|^2 / (|a|^2 |b|^2); insensitive to global phase and scale."""
    return abs(inner_product(a, b)) ** 2 / (a.norm_sq * b.norm_sq)
