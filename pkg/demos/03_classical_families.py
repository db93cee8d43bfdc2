"""
Classical families: closed forms against re-derivation
======================================================

The cubic covering-type formulas and the facet polynomials for U(n), SU(n),
SO(n) and Sp(n) are re-derived from the cohomology presentations and the
facet formula, and compared with the closed forms.
"""

from liefaces.catalog import presentation_of, so_derived_ct_bound
from liefaces.covering import classical_ct_bound, weighted_length_bound
from liefaces.faces import classical_facet_bound, kahler_facet_bound

print("family  n  closed-form ct  derived ct")
for fam in ("U", "SU", "Sp"):
    for n in range(2, 7):
        derived = weighted_length_bound(presentation_of(fam, "Q", n)).value
        print(f"{fam:<7} {n}  {classical_ct_bound(fam, n).value:<14}  {derived}")
for n in range(3, 9):
    print(f"SO      {n}  {classical_ct_bound('SO', n).value:<14}  {so_derived_ct_bound(n).value}")

# %%
# Facet bounds grow like 2^rank on top of a degree-5 polynomial in n.
print()
print("family   n  derived facets  closed form  agree")
for fam in ("U", "SU", "SO_odd", "SO_even", "Sp"):
    for n in (2, 4, 8):
        r = classical_facet_bound(fam, n)
        print(f"{fam:<8} {n}  {r.derived:<14}  {r.paper_literal:<11}  {r.agree}")

# %%
# Kahler / symplectic manifolds of real dimension 2m.
for m in range(1, 6):
    r = kahler_facet_bound(m)
    print(f"m={m}: f_2m >= {r.derived} (closed form {r.paper_literal})")
