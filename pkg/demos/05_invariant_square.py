"""The elementary-discrete-invariant square: marks, propagation, consistency.

Run:  python demos/05_invariant_square.py
"""

from quadchow.edi import (
    EDISquare,
    check_witt_consistency,
    propagate,
    render_ascii,
    run_edi_json,
)

# A 7-dimensional quadric has a 4 x 4 square (rows = grassmannians, bottom row
# is the quadric itself; column 0 holds the highest elementary classes).
empty = EDISquare(7)
print(render_ascii(empty))
print()

# Marking the highest class of G_1 rational propagates up every higher row,
# and carries the paired rho-facts along.
sq = propagate(EDISquare(7, marks={(1, 0)}))
print(render_ascii(sq))
print("rho facts:", sorted(sq.rho))
print()

# Against the hypothesis that the first Witt index is 2, that mark is
# inconsistent: a rational highest class in row i forces i_1 <= i.
report = check_witt_consistency(sq, 2)
print("consistent with i_1 = 2?", report.consistent, "violations:", report.violations)

# The same pipeline over the JSON interface used by `quadchow edi`.
out = run_edi_json({"n": 12, "marks": [[3, 0], [6, 6], [0, 4]], "witt_index": 3})
print()
print(out["ascii"])
print("inconsistencies:", out["inconsistencies"])
