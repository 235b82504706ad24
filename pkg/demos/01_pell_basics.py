"""Pell equations and their X-coordinate sequences.

The toolkit studies solutions of X^2 - d Y^2 = 1.  Every non-square
d > 1 has a minimal ("fundamental") solution (X1, Y1), and every further
solution comes from powers of the unit gamma = X1 + Y1 sqrt(d).  This
demo walks the three equivalent ways the library evaluates X_l and the
certified growth sandwich that everything downstream relies on.
"""

from pellsu.pell import (
    audit_growth,
    fundamental_solution,
    p_poly,
    p_poly_invert,
    x_at,
    x_at_binet,
    x_iter,
)

print("== fundamental solutions ==")
for d in (2, 3, 5, 61):
    ctx = fundamental_solution(d)
    print(f"d = {d:3d}: X1 = {ctx.X1}, Y1 = {ctx.Y1}")
print("(d = 61 is the classic case with a surprisingly large minimum)")

print("\n== the X-coordinate sequence, three ways ==")
ctx = fundamental_solution(2)
for l, x in zip(range(1, 6), x_iter(ctx)):
    assert x == x_at(ctx, l) == x_at_binet(ctx, l) == p_poly(ctx.X1, l)
    print(f"X_{l} = {x}")
print("recurrence, exact-surd closed form and index polynomial all agree")

print("\n== inverting the index polynomial ==")
n = p_poly(21, 3)
print(f"P_3(21) = {n}; inverting: x1 = {p_poly_invert(n, 3)}")
print(f"P_3 never takes the value {n + 1}: {p_poly_invert(n + 1, 3)}")

print("\n== certified growth sandwich ==")
print("gamma^l / 2.5 < X_l < gamma^l, checked exactly for d <= 20, l <= 30:")
ok = all(audit_growth(fundamental_solution(d), 30)
         for d in (2, 3, 5, 6, 7, 8, 10, 13, 15, 20))
print(f"all hold: {ok}")
