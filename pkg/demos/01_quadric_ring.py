"""A tour of the Chow ring of one split quadric, on its monomial basis.

Run:  python demos/01_quadric_ring.py
"""

from quadchow.quadpow import (
    basis_symbols,
    diagonal_class,
    format_cycle,
    h_power_cycle,
    l_cycle,
    lp_cycle,
    monomial_cycle,
    quad_context,
)

# A five-dimensional split quadric: d = 2, so the basis is
# 1, h, h^2, l_2, l_1, l_0 with h the hyperplane class and l_b the class of a
# b-dimensional projective subspace sitting inside the quadric.
ctx = quad_context(5)
print("basis of CH(X), n = 5:")
for s in basis_symbols(ctx):
    print("   ", format_cycle(monomial_cycle(ctx, [s])))

# Powers of the hyperplane class fold into doubled subspace classes once they
# pass the middle dimension: h^3 = 2 l_2, ..., h^5 = 2 l_0.
for a in range(6):
    print(f"h^{a} =", format_cycle(h_power_cycle(ctx, a)))

# Intersecting with h walks down the subspace chain.
h = h_power_cycle(ctx, 1)
print("h . l2 =", format_cycle(h * l_cycle(ctx, 2)))
print("h . l0 =", format_cycle(h * l_cycle(ctx, 0)))

# For even n the middle dimension splits into two rulings whose intersection
# pattern depends on n mod 4.
for n in (4, 6):
    ctx_even = quad_context(n)
    l = l_cycle(ctx_even, ctx_even.d)
    lp = lp_cycle(ctx_even)
    print(f"n = {n}:  l_d . l_d  =", format_cycle(l * l) if not (l * l).is_zero() else "0")
    print(f"n = {n}:  l_d . l_d' =", format_cycle(l * lp) if not (l * lp).is_zero() else "0")

# The diagonal class of X x X, assembled from dual basis pairs.
print("diagonal of X^2, n = 5:")
print("   ", format_cycle(diagonal_class(ctx)))
