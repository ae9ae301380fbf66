"""
Distance graphs of a small code
===============================

Join two codewords when they sit within Hamming distance alpha of each
other and watch the graph's components merge as alpha grows.
"""

from fccforge import codes, distgraph
from fccforge.gf import field

# Six binary words of length five: three near 00000 and three near 11111.
words = ["00000", "00001", "00010", "01111", "10111", "11111"]
C = codes.from_list(field(2), [[int(b) for b in w] for w in words])
print(C, "d_min =", C.d_min, "d_max =", C.d_max)

###############################################################################
# At alpha = 2 the two clusters are two triangles with no edge between them.
G = distgraph.build_alpha_graph(C, 2)
for comp in G.components():
    print("component:", [words[i] for i in comp])

###############################################################################
# The component profile: Q(alpha) for every alpha between d_min and d_max.
for alpha, Q in distgraph.component_profile(C):
    print(f"alpha={alpha}  Q={Q}")
print("connected from alpha =", distgraph.connectivity_threshold(C))

###############################################################################
# DOT text for an external viewer (e.g. ``dot -Tpng``).
print(distgraph.export_dot(G))
