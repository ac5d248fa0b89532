"""Universal dimension formulas at the classical parameter points.

Evaluates dim g and the Cartan-power dimensions dim Y_k at the so(n) family
and the exceptional row, and checks them against the Weyl dimension formula
on the actual root systems.  Everything is exact rational arithmetic.
"""

from liecoh import VogelParams, dim_g, dim_y2, dim_y3, dim_yk, parse_type

ROWS = [
    ("so8 / D4", "D4", VogelParams(-2, 4, 4)),
    ("f4", "F4", VogelParams(-2, 5, 6)),
    ("e6", "E6", VogelParams(-2, 6, 8)),
    ("e7", "E7", VogelParams(-2, 8, 12)),
    ("e8", "E8", VogelParams(-2, 12, 20)),
]

print("adjoint dimensions from the three-parameter formula:")
for label, name, params in ROWS:
    rs = parse_type(name)
    weyl = rs.weyl_dim(rs.adjoint_weight())
    print(f"  {label:10s} dim g = {dim_g(params)}   (Weyl formula: {weyl})")

print("\nso(n) family, (alpha, beta, gamma) = (-2, 4, n-4):")
for n in range(5, 13):
    print(f"  so({n}): {dim_g(VogelParams(-2, 4, n - 4))}  =  n(n-1)/2")

print("\nCartan powers of e8 (the 248):")
rs = parse_type("E8")
theta = rs.adjoint_weight()
p = VogelParams(-2, 12, 20)
for k in (1, 2, 3):
    kw = tuple(k * c for c in theta)
    print(f"  dim Y_{k} = {dim_yk(p, k)}   (Weyl at {k}*theta: {rs.weyl_dim(kw)})")
print(f"  closed forms agree: Y2 = {dim_y2(p)}, Y3 at D4 point = "
      f"{dim_y3(VogelParams(-2, 4, 4))}")
