"""
When can a code carry a strict FCC?
===================================

A code can give a function more protection than its data only if the graph
at distance d_f - 1 falls apart into enough components.
"""

from fccforge import codes, fcc
from fccforge.gf import field

for C in (codes.hamming_code(3), codes.reed_solomon(field(5), 4, 2), codes.reed_muller1(3)):
    rep = fcc.feasibility_report(C)
    print(C, "threshold", rep.threshold, "max strict d_f", rep.max_strict_df)
    for v in rep.verdicts:
        print("   d_f =", v.d_f, "feasible" if v.feasible else "infeasible", list(v.citations))

###############################################################################
# A code spanned by two words of different weight: its minimum-weight words
# do not span it, so the minimum-distance graph splits into two cosets.
C = codes.from_generator(field(2), [[1, 1, 0, 0, 0], [1, 1, 1, 1, 1]])
v = fcc.strict_feasible(C, 2, 3)
print("feasible:", v.feasible, "witness:", [[C.words[i].tolist() for i in g] for g in v.witness])
print("span test:", codes.min_weight_span_test(C))
