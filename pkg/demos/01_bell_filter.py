"""The d-port Bell filter: build it, check the eta-condition, sweep Bell states.

The filter is a cascade of beam splitters. Port 0 is mixed with port d-1 at
transmissivity (d-1)/d, after the (d-1)-port filter has acted on ports 1..d-1.
For the antisymmetric state to come out in coincidence with certainty, the
product of each last-row entry with its cofactor must be the same for every
column. For this cascade that constant is 1/d.
"""

import numpy as np

from qudit_teleport import bell_filter_unitary, check_sufficiency
from qudit_teleport.teleport import bell_sweep

np.set_printoptions(precision=4, suppress=True)

for d in range(2, 7):
    spec = bell_filter_unitary(d)
    ok, eta = check_sufficiency(spec.unitary)
    print(f"d={d}  transmissivities={[round(t, 4) for t in spec.transmissivities]}  eta={eta.real}  ok={ok}")

print("\nU_3 =")
print(bell_filter_unitary(3).unitary.matrix.real)

# Coincidence probability for every generalized Bell state |B_{m1,m2}>.
# Only (0, 0), which is the antisymmetric state, gets through.
for d in (2, 3, 4):
    print(f"\ncoincidence probabilities, d={d} (rows m1, cols m2):")
    print(bell_sweep(d))
