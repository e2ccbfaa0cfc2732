"""Teleporting one OAM qutrit with a three-photon antisymmetric resource.

Alice holds two photons of the shared state and Bob holds one. Charlie's
photon carries the unknown qutrit. Alice's two photons and Charlie's enter the
3-port Bell filter, and a three-fold coincidence heralds success. Bob then
holds the input state and needs no correction. The success probability does
not depend on the input and equals 1/9.
"""

import numpy as np

from qudit_teleport import QuditInput, teleport_single_qudit

rng = np.random.default_rng(7)
for trial in range(5):
    chi = QuditInput.random(3, rng)
    phys = teleport_single_qudit(3, chi, "physical-filter")
    ideal = teleport_single_qudit(3, chi, "ideal-projector")
    print(
        f"trial {trial}: p={phys.success_probability:.6f} (1/9={1 / 9:.6f}) "
        f"F={phys.fidelity:.12f}  ideal projector p={ideal.success_probability:.6f}"
    )

# Bob's reduced state after a success, for the last input. The density
# operator is indexed by occupation tuples, so reorder it by OAM label first.
rho = phys.bob_state
pos = rho.index()
order = [pos[tuple(int(l == k) for l in range(3))] for k in range(3)]
print("\nBob's density matrix (abs, OAM order):")
print(np.round(np.abs(rho.matrix[np.ix_(order, order)]), 4))
print("input |chi><chi| (abs):")
print(np.round(np.abs(np.outer(chi.coefficients, chi.coefficients.conj())), 4))

for d in (2, 3, 4, 5):
    rep = teleport_single_qudit(d, QuditInput.random(d, rng))
    print(f"d={d}: p * d^2 = {rep.success_probability * d * d:.12f}, F = {rep.fidelity:.12f}")
