"""
Vertex bounds for the exceptional Lie groups
============================================

A nonzero cup product of classes in degrees i_1 <= ... <= i_L forces any
triangulation to have at least L + 1 + sum k*i_k vertices (one more when the
degrees differ).  Mod 2 cohomology of the exceptional groups has long
truncated generators, which makes those products long.
"""

from liefaces.catalog import EXCEPTIONAL, group_data, presentation_of
from liefaces.covering import factor_degrees, rank_dim_bound, rational_type_bound, weighted_length_bound

for group in EXCEPTIONAL:
    d, l, rt = group_data(group)
    print(f"{group}: dim {d}, rank {l}")
    for field in ("F2", "F3", "F5", "Q"):
        pres = presentation_of(group, field)
        print(f"  {field:<2}  {pres.citation:<60} ct >= {weighted_length_bound(pres).value}")
    print(f"  rational type {rt.m}: ct >= {rational_type_bound(rt).value}")
    print(f"  dimension and rank alone: ct >= {rank_dim_bound(d, l).value}")

# %%
# The longest mod 2 product for G2 uses x3 three times and x5 once.
print(factor_degrees(presentation_of("G2", "F2")))
