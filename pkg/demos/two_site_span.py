"""What it takes for two training states to span the low-energy subspace.

The 2-site XY chain has a single ground-state crossing at B_z = 1.  Four
training choices show the span story: with B_x = 0, two ground states from
the same side of the crossing are the *same* vector (the Gram matrix is
singular and the continuation goes wrong past the crossing), while either
straddling the crossing or adding the first excited state completes the
subspace exactly.  A finite B_x mixes the sectors, so any two nearby
ground states work approximately.
"""

import numpy as np

from eigencont import (
    MeasurementConfig,
    TrainingSpec,
    assemble,
    build_training_set,
    build_xy,
    dense_matrix,
    measure_subspace,
    solve_gevp,
)

TARGETS = np.linspace(0.0, 2.0, 41)

SCENARIOS = [
    ("Bx=0,   grounds at 0.1 and 0.9 (same sector)", 0.0, ((0.1, 0), (0.9, 0))),
    ("Bx=0,   grounds at 0.1 and 1.6 (both sides) ", 0.0, ((0.1, 0), (1.6, 0))),
    ("Bx=0,   ground + first excited at 0.1       ", 0.0, ((0.1, 0), (0.1, 1))),
    ("Bx=0.1, grounds at 0.1 and 0.9              ", 0.1, ((0.1, 0), (0.9, 0))),
    ("Bx=0.1, grounds at 0.1 and 1.6              ", 0.1, ((0.1, 0), (1.6, 0))),
]

print("two lowest continued levels vs. exact, 2-site XY chain, J = -1")
print()
for label, Bx, points in SCENARIOS:
    H = build_xy(2, J=-1.0, Bx=Bx)
    ts = build_training_set(H, TrainingSpec(points))
    sm = measure_subspace(ts, H, MeasurementConfig(mode="exact"))
    min_overlap_eig = np.linalg.eigvalsh(sm.S)[0]
    worst = np.zeros(2)
    min_rank = 2
    for g in TARGETS:
        sol = solve_gevp(*assemble(sm, H, g), eps=1e-10)
        exact = np.linalg.eigvalsh(dense_matrix(H, g))
        min_rank = min(min_rank, sol.retained_rank)
        for level in range(sol.retained_rank):
            worst[level] = max(worst[level], abs(sol.energies[level] - exact[level]))
    print(f"{label}  min eig(S) = {min_overlap_eig:8.1e}  retained rank >= {min_rank}")
    if min_rank == 2:
        print(f"    max errors: level 0 = {worst[0]:.2e}, level 1 = {worst[1]:.2e}")
    else:
        print(f"    rank-deficient basis; max level-0 error = {worst[0]:.2e}")
    print()
