"""Growing the antisymmetric state one photon at a time.

Start with one photon. At stage n a fresh photon with a new OAM label joins on
path n-1, the n-port Bell filter acts, and the event with one photon per path
is heralded. Each stage succeeds with probability 1/n, so the whole ladder
costs 1/d!. The last stage of the qutrit case needs only the three-fold
coincidence. If the input pair is symmetric instead of antisymmetric,
coincidences still happen but the output has no antisymmetric component.
"""

from qudit_teleport import prepare_antisymmetric, qutrit_prep_demo

for d in range(2, 6):
    rep = prepare_antisymmetric(d)
    stages = ", ".join(f"{p:.4f}" for p in rep.stage_probabilities)
    print(f"d={d}: stages [{stages}]  total={rep.total_probability:.6f}  F={rep.output_fidelity:.12f}")

good = qutrit_prep_demo()
bad = qutrit_prep_demo(symmetric=True)
print(f"\nqutrit stage, antisymmetric pair: p={good.total_probability:.6f} F={good.output_fidelity:.6f}")
print(f"qutrit stage, symmetric pair:     p={bad.total_probability:.6f} F={bad.output_fidelity:.6f}")
