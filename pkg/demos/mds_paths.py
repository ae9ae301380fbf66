"""
Walking between Reed-Solomon codewords
======================================

In an MDS code any k coordinates pin down a codeword, so from u we can always
step to a neighbour at distance exactly d that is strictly closer to v.
"""

import numpy as np

from fccforge import codes, mdspath
from fccforge.gf import field

C = codes.reed_solomon(field(5), 4, 2)
print(C, "d =", C.d_min)

# the codeword with 1 at position 1 and 0 at position 2
print(mdspath.projection_decode(C, [1, 2], [1, 0]))

u, v = np.array([0, 0, 0, 0]), np.array([1, 2, 3, 4])
for step in mdspath.mds_path_steps(C, u, v):
    print(step.from_word, "->", step.to_word, "J =", step.chosen, "pivot", step.pivot)

###############################################################################
# Every hop has length d and the distance to v drops each time.
rng = np.random.default_rng(1)
C7 = codes.reed_solomon(field(7), 6, 2)
a, b = rng.choice(C7.M, size=2, replace=False)
path = mdspath.mds_path(C7, C7.words[a], C7.words[b])
print(mdspath.path_to_dict(C7, path))
