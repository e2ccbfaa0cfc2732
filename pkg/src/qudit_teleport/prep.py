"""Recursive preparation of the d-photon antisymmetric state.

Stage ``n`` feeds the ``(n-1)``-photon antisymmetric state plus a fresh photon
(path ``n-1``, OAM ``n-1``) into the ``n``-port Bell filter and keeps only
events with one photon per output path. Heralding is an ideal projector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .antisym import LambdaMatrix, antisymmetric_state
from .bell_filter import bell_filter_unitary, coincidence_project
from .fock import PureState, Register, add_photon, make_state, state_fidelity
from .optics import apply_unitary


@dataclass
class PrepReport:
    d: int
    stage_probabilities: list[float]
    total_probability: float
    output_fidelity: float
    state: PureState | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {
            "d": self.d,
            "stage_probabilities": list(self.stage_probabilities),
            "total_probability": self.total_probability,
            "output_fidelity": self.output_fidelity,
        }


def herald(state: PureState, paths) -> PureState:
    """Ideal single-photon heralding on every listed path."""
    kept, _ = coincidence_project(state, paths)
    return kept


def prepare_antisymmetric(d: int) -> PrepReport:
    if not 2 <= d <= 5:
        raise ValueError(f"prepare_antisymmetric supports 2 <= d <= 5, got {d}")
    reg = Register(d, d)
    state = make_state(reg, [(reg.occupation([(0, 0)]), 1.0)])
    probs = []
    for n in range(2, d + 1):
        state = add_photon(state, n - 1, n - 1)
        before = state.norm_sq
        u = bell_filter_unitary(n).unitary
        state = herald(apply_unitary(u, state), range(n))
        probs.append(state.norm_sq / before)
    target = antisymmetric_state(LambdaMatrix(tuple(range(d))), reg)
    fid = state_fidelity(target, state) if state.norm_sq > 0 else 0.0
    return PrepReport(d, probs, math.prod(probs), fid, state)


def qutrit_prep_demo(symmetric: bool = False) -> PrepReport:
    """Final d = 3 stage, conditioned only on a three-fold coincidence.

    The input is ``(|12> - |21>)/sqrt(2)`` on paths 0, 1 and ``|3>`` on path 2;
    ``symmetric=True`` swaps in ``(|12> + |21>)/sqrt(2)`` instead.
    """
    reg = Register(3, 3)
    s = 1 if symmetric else -1
    pair = make_state(reg, [
        (reg.occupation([(0, 0), (1, 1)]), 1 / math.sqrt(2)),
        (reg.occupation([(0, 1), (1, 0)]), s / math.sqrt(2)),
    ])
    state = add_photon(pair, 2, 2)
    out, prob = coincidence_project(apply_unitary(bell_filter_unitary(3).unitary, state), range(3))
    target = antisymmetric_state(LambdaMatrix((0, 1, 2)), reg)
    fid = state_fidelity(target, out) if out.norm_sq > 0 else 0.0
    return PrepReport(3, [prob], prob, fid, out)
