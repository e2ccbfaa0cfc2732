"""Qubits moved per extra photon: pairs versus one big antisymmetric state.

Teleporting qubit by qubit costs one entangled pair, so two photons, per qubit.
Splitting a d-photon antisymmetric state in half moves log2 C(d, d/2) qubits
for d photons, which beats one half per photon from d = 4 onward. The rows can
be piped to any plotting tool. The CLI does the same with
`qudit-teleport efficiency --d 8 --format csv`.
"""

import csv
import sys

from qudit_teleport.teleport import efficiency_curve

rows = efficiency_curve(range(2, 21, 2))
writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]), lineterminator="\n")
writer.writeheader()
writer.writerows(rows)
