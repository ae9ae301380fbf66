"""
Protecting a parity bit more than the data
==========================================

Append a repeated copy of the message parity to a Hamming codeword.  The
data stays 1-error correcting while the parity survives 2 errors.
"""

from fccforge import codes, fcc

f = fcc.parity(4)
E = fcc.two_step_construct(f, codes.hamming_code(3), codes.repetition(2))
for u, c in zip(E.messages, E.codewords):
    print("".join(map(str, u)), f(u), "".join(map(str, c)))

dd, df, _, _ = E.distances()
print(f"d_d = {dd}, d_f = {df}, redundancy = {E.redundancy}")
print("claims (3, 5):", fcc.verify_fcc(E, 3, 5).passed)

###############################################################################
# Nearest-codeword decoding over a channel making exactly t errors.
stats = fcc.simulate_channel(E, t_data=1, t_func=2, trials=10_000, seed=0)
print(stats)

###############################################################################
# Two errors can send the decoder to the wrong message, but never to one with
# a different parity.
m, received, got = fcc.find_decoding_failure(E, 2)
print("sent", E.codewords[m], "received", received, "decoded", E.codewords[got])
print("same parity:", E.labels[m] == E.labels[got])

###############################################################################
# The perfect-code redundancy bound for these parameters.
print(fcc.perfect_redundancy_bound(2, 4, 3))
