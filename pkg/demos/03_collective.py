"""Collective teleportation: several photons in one antisymmetric state.

With the d-photon antisymmetric resource split into n photons for Alice and
d-n for Bob, Charlie can send an antisymmetric (d-n)-photon state. That state
lives in a space of dimension C(d, n), and success has probability 1/C(d, n)^2.
The shared resource is maximally entangled across every such split, which the
Schmidt spectra below confirm.
"""

import math

import numpy as np

from qudit_teleport import LambdaMatrix, PartitionSpec, QuditInput, antisymmetric_state, schmidt_spectrum, teleport_collective

psi = antisymmetric_state(LambdaMatrix((0, 1, 2, 3)))
for n in (1, 2, 3):
    spec = schmidt_spectrum(psi, range(n))
    k = math.comb(4, n)
    print(f"d=4 split ({n},{4 - n}): {k} Schmidt coefficients, all {spec[0]:.6f} (1/sqrt({k}) = {1 / math.sqrt(k):.6f})")

rng = np.random.default_rng(1)
rep = teleport_collective(4, PartitionSpec.contiguous(4, 2), QuditInput.random(6, rng), "ideal-projector")
print(f"\n(2,2) with d=4: p={rep.success_probability:.6f} (1/36={1 / 36:.6f}) F={rep.fidelity:.12f} qubits={rep.qubits_sent:.4f}")

# A two-photon qutrit through the physical 3-port filter: Alice sends her one
# photon through the cascade together with Charlie's two.
rep = teleport_collective(3, PartitionSpec(1, (0,), (1, 2)), QuditInput.random(3, rng), "physical-filter")
print(f"(1,2) with d=3, physical filter: p={rep.success_probability:.6f} (1/9) F={rep.fidelity:.12f}")
