#!/usr/bin/env python3
"""Build a twisted generalized Reed-Solomon code from scratch.

We work over GF(37), place the evaluation points at the nine 9th roots of
unity, and twist the degree-1 coefficient (the hook) into the degree-3 and
degree-4 monomials.  The script prints the generator and parity-check
matrices and checks their defining relation.
"""

from tgrs import (Field, TgrsSpec, encode, generator_matrix,
                  parity_check_matrix, rank)

field = Field(37)
print(f"working in GF({field.q})")

# nine distinct points: all roots of x^9 - 1 (9 divides q - 1 = 36)
alpha = field.roots_of_xn_minus_lambda(9, field.one())
print("evaluation points:", [a.rep for a in alpha])

spec = TgrsSpec(
    field=field,
    n=9, k=3,        # length and dimension
    h=1,             # the hook: coefficient f_1 feeds the twist monomials
    l=1,             # twist exponents k+0 and k+1, i.e. x^3 and x^4
    alpha=tuple(alpha),
    v=tuple(field.element(x) for x in (21, 30, 1, 1, -1, 1, 1, 1, -1)),
    eta=(field.element(22), field.element(24)),
)

G = generator_matrix(spec)
print("\ngenerator matrix (rows are evaluated monomials, row 1 twisted):")
print(G.pretty())

H = parity_check_matrix(spec)
print("\nclosed-form parity-check matrix:")
print(H.pretty())

product = G @ H.transpose()
print("\nG H^T is the zero matrix:", product.is_zero())
print("rank(G) =", rank(G), " rank(H) =", rank(H))

# encoding a message evaluates the twisted polynomial at every point
message = [field.element(x) for x in (5, 11, 2)]
word = encode(spec, message)
print("\ncodeword for message (5, 11, 2):", [x.rep for x in word])

# every codeword is annihilated by the parity check
from tgrs import MatGF
col = MatGF(field, [[x] for x in word])
print("H annihilates it:", (H @ col).is_zero())
