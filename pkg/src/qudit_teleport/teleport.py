"""End-to-end teleportation through the antisymmetric Bell filter.

Two post-selection modes are available. ``physical-filter`` sends Charlie's
and Alice's photons through the beam-splitter cascade and keeps coincidence
events; ``ideal-projector`` applies the projector onto the antisymmetric
state of Charlie's and Alice's paths directly.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Sequence

import numpy as np

from .antisym import LambdaMatrix, PartitionSpec, antisymmetric_state, colex_subsets, minor_state
from .bell_filter import GeneralizedBellIndex, bell_filter_unitary, coincidence_project, generalized_bell_state
from .fock import DensityOperator, PureState, Register, fidelity, inner_product, partial_trace, project, single_photon, tensor
from .optics import apply_unitary

MODES = ("physical-filter", "ideal-projector")


@dataclass
class QuditInput:
    coefficients: np.ndarray

    def __post_init__(self):
        self.coefficients = np.asarray(self.coefficients, dtype=complex)
        norm = float(np.sum(np.abs(self.coefficients) ** 2))
        if abs(norm - 1) > 1e-12:
            raise ValueError(f"input state not normalized (sum |a|^2 = {norm!r})")

    @classmethod
    def random(cls, dim: int, rng: np.random.Generator) -> QuditInput:
        z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        return cls(z / np.linalg.norm(z))

    @classmethod
    def basis(cls, dim: int, k: int) -> QuditInput:
        c = np.zeros(dim, dtype=complex)
        c[k] = 1
        return cls(c)


@dataclass
class TeleportReport:
    d: int
    partition: tuple[int, int]
    mode: str
    success_probability: float
    fidelity: float
    photons_total: int
    modes_total: int
    qubits_sent: float
    bob_state: DensityOperator | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        out = asdict(self)
        out.pop("bob_state")
        out["partition"] = list(self.partition)
        return out


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def _as_input(chi, dim: int) -> QuditInput:
    if not isinstance(chi, QuditInput):
        chi = QuditInput(chi)
    if len(chi.coefficients) != dim:
        raise ValueError(f"expected {dim} coefficients, got {len(chi.coefficients)}")
    return chi


def _finish(post: PureState, bob_paths, target: PureState, report: dict) -> TeleportReport:
    prob = post.norm_sq
    if prob <= 0:
        return TeleportReport(success_probability=0.0, fidelity=0.0, **report)
    rho = partial_trace(post, bob_paths).normalized()
    return TeleportReport(success_probability=prob, fidelity=fidelity(rho, target), bob_state=rho, **report)


def single_qudit_post_state(d: int, coefficients, mode: str = "physical-filter") -> tuple[PureState, tuple[int, ...]]:
    """Post-selected (unnormalized) state of the single-qudit protocol.

    Path layout: Alice ``0..d-2``, Bob ``d-1``, Charlie ``d``. Bob's photon is
    the first row of the shared determinant; Charlie's photon enters the last
    filter port. Returns the state and the filter paths.
    """
    _check_mode(mode)
    alice = tuple(range(d - 1))
    bob, charlie = d - 1, d
    shared = antisymmetric_state(LambdaMatrix((bob,) + alice), Register(d, d))
    full = tensor(shared, single_photon(Register(1, d), coefficients))

    filter_paths = alice + (charlie,)
    if mode == "physical-filter":
        u = bell_filter_unitary(d).unitary.on_paths(filter_paths)
        post, _ = coincidence_project(apply_unitary(u, full), filter_paths)
    else:
        phi = antisymmetric_state(LambdaMatrix(tuple(range(d))), Register(d, d))
        post = project(full, phi, filter_paths)
    return post, filter_paths


def teleport_single_qudit(d: int, chi, mode: str = "physical-filter") -> TeleportReport:
    """Teleport one photon's OAM qudit with ``d - 1`` of Alice's photons."""
    _check_mode(mode)
    limit = 5 if mode == "physical-filter" else 6
    if not 2 <= d <= limit:
        raise ValueError(f"{mode} single-qudit teleportation supports 2 <= d <= {limit}")
    chi = _as_input(chi, d)
    post, _ = single_qudit_post_state(d, chi.coefficients, mode)
    target = single_photon(Register(1, d), chi.coefficients)
    meta = dict(d=d, partition=(d - 1, 1), mode=mode, photons_total=d + 1, modes_total=(d + 1) * d, qubits_sent=math.log2(d))
    return _finish(post, [d - 1], target, meta)


def antisym_basis(register: Register, paths: Sequence[int], d: int) -> list[PureState]:
    """Minor-determinant basis of the antisymmetric ``len(paths)``-photon space."""
    return [minor_state(register, paths, cols) for cols in colex_subsets(tuple(range(d)), len(paths))]


def _superpose(states: Sequence[PureState], coeffs) -> PureState:
    total = None
    for s, c in zip(states, coeffs):
        term = s.scaled(c)
        total = term if total is None else total + term
    return total


def teleport_collective(d: int, part: PartitionSpec, chi, mode: str = "ideal-projector") -> TeleportReport:
    """Teleport an antisymmetric ``(d - n)``-photon state of Charlie's.

    ``part`` splits the shared state's paths ``0..d-1`` into Alice (``n``
    photons) and Bob (``d - n``). Charlie's photons occupy paths
    ``d..2d-n-1``. ``chi`` is either a coefficient list over the minor basis
    (column subsets in colex order) or a normalized :class:`PureState` on
    Charlie's ``d - n`` paths.

    The physical filter needs a single photon on one side: ``n == d - 1``
    (Charlie's photon enters the last port) or ``n == 1`` (Alice's does).
    """
    _check_mode(mode)
    if part.d != d or set(part.side_a_paths) | set(part.side_b_paths) != set(range(d)):
        raise ValueError("partition must cover paths 0..d-1")
    if mode == "physical-filter":
        if not 2 <= d <= 5 or part.n not in (1, d - 1):
            raise ValueError(f"physical filter unsupported for d={d}, n={part.n}")
    elif not 2 <= d <= 6:
        raise ValueError("ideal-projector collective teleportation supports 2 <= d <= 6")

    n, k = part.n, d - part.n
    dim = math.comb(d, k)
    alice = part.side_a_paths
    bob = tuple(sorted(part.side_b_paths))
    charlie = tuple(range(d, d + k))
    char_reg = Register(k, d)
    char_basis = antisym_basis(char_reg, range(k), d)

    if isinstance(chi, PureState):
        coeffs = np.array([inner_product(b, chi) for b in char_basis])
        deficit = chi.norm_sq - float(np.sum(np.abs(coeffs) ** 2))
        if deficit > 1e-10:
            raise ValueError(f"input leaves the antisymmetric subspace (overlap deficit {deficit:.3g})")
        chi = QuditInput(coeffs)
    chi = _as_input(chi, dim)

    shared = antisymmetric_state(LambdaMatrix(alice + part.side_b_paths), Register(d, d))
    full = tensor(shared, _superpose(char_basis, chi.coefficients))

    if mode == "physical-filter":
        ports = (alice + charlie) if n == d - 1 else (charlie + alice)
        u = bell_filter_unitary(d).unitary.on_paths(ports)
        post, _ = coincidence_project(apply_unitary(u, full), ports)
    else:
        ports = charlie + alice
        phi = antisymmetric_state(LambdaMatrix(tuple(range(d))), Register(d, d))
        post = project(full, phi, ports)

    target = _superpose(antisym_basis(Register(k, d), range(k), d), chi.coefficients)
    meta = dict(d=d, partition=(n, k), mode=mode, photons_total=d + k, modes_total=(d + k) * d, qubits_sent=math.log2(dim))
    return _finish(post, list(bob), target, meta)


def bell_filter_response(d: int, idx: GeneralizedBellIndex | tuple[int, int]) -> float:
    """Coincidence probability of a generalized Bell state through ``U_d``."""
    if not 2 <= d <= 5:
        raise ValueError("bell_filter_response supports 2 <= d <= 5")
    state = generalized_bell_state(d, idx)
    _, prob = coincidence_project(apply_unitary(bell_filter_unitary(d).unitary, state), range(d))
    return prob


def bell_sweep(d: int) -> np.ndarray:
    """``d x d`` table of coincidence probabilities indexed by ``(m1, m2)``."""
    return np.array([[bell_filter_response(d, (m1, m2)) for m2 in range(d)] for m1 in range(d)])


def efficiency_curve(d_list: Sequence[int]) -> list[dict]:
    """Qubits teleported per additional photon, individual vs collective.

    The individual scheme spends an entangled pair per qubit (plus the input
    photon when counting generated photons). The collective scheme spends the
    ``d``-photon antisymmetric state to move ``log2 C(d, d/2)`` qubits.
    """
    rows = []
    for d in d_list:
        if d < 2 or d % 2:
            raise ValueError(f"collective (d/2, d/2) rows need even d >= 2, got {d}")
        qubits = math.log2(math.comb(d, d // 2))
        rows.append({
            "d": d,
            "individual_per_additional_photon": 0.5,
            "individual_per_generated_photon": 1 / 3,
            "collective_qubits": qubits,
            "collective_per_additional_photon": qubits / d,
            "collective_per_generated_photon": qubits / (d + d // 2),
            # large-d approximation C(d, d/2) ~ 2^d quoted alongside; never checked
            "collective_qubits_asymptotic": float(d),
            "bell_outcomes": d**d,
            "individual_success_bound": 2.0**-d,
        })
    return rows
