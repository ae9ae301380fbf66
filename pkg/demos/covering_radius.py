"""
Covering radii
==============

Three ways to get R(C): search the whole ambient space, walk coset leaders
by syndrome, or read a closed form off the code family.
"""

from fccforge import codes, covering

H = codes.hamming_code(3)
res = covering.covering_radius_exact(H)
print("Hamming [7,4,3]: R =", res.value, "attained at", res.certifier)

###############################################################################
# The Golay code has 2^11 syndromes, so coset leaders are far cheaper than
# visiting all 2^23 words.
G = codes.binary_golay()
print("Golay [23,12,7]: R =", covering.covering_radius_coset_leader(G).value)

###############################################################################
# First-order Reed-Muller codes have a closed form; check it for small m.
for m in range(1, 5):
    exact = covering.covering_radius_exact(codes.reed_muller1(m)).value
    print(f"RM(1,{m}): exact {exact}, formula {covering.rm1_covering_radius(m)}")

###############################################################################
# The dual-distance expression is kept in quarantine: on the Hamming code it
# evaluates to a negative number, so it is flagged vacuous and never used.
jm = covering.janwa_mattson_bound(H)
print("dual-distance expression:", jm.value, "vacuous:", jm.vacuous)
