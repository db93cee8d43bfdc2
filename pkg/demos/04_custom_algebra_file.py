"""
Bounds for your own cohomology presentation
===========================================

Any space whose cohomology is an exterior algebra tensor truncated
polynomial algebras can be described in a small text file and pushed
through the same pipeline.  Here: complex projective space CP^3, whose
cohomology is Z[x2]/(x2^4).
"""

from liefaces.algebra import betti_of
from liefaces.covering import weighted_length_bound
from liefaces.faces import face_bound_vector, total_bound
from liefaces.report import parse_algebra_file, render_table

text = """
# complex projective 3-space
name CP3
field Q
gen degree=2 height=3
"""
pres = parse_algebra_file(text)
f0 = weighted_length_bound(pres).value
betti = betti_of(pres)
v = face_bound_vector(betti.d, f0, betti)
print(f"{pres.name}: f0 >= {f0}")
print(render_table(v))
print("total >=", total_bound(v))

# %%
# The same file works from the command line:
#   liefaces ct --file cp3.alg
