"""
Face-number tables for G2 and F4
================================

Feed the vertex bound and the Betti numbers into the generalized Lower Bound
Theorem.  The coefficient field changes the Betti numbers and therefore the
bound in each dimension; no single field wins everywhere.
"""

from liefaces.catalog import best_ct_bound
from liefaces.faces import total_bound
from liefaces.report import group_faces, render_table

g2 = group_faces("G2", "F2")
print(render_table(g2))
print("all simplices of G2 >=", total_bound(g2))

# %%
# F4 over three fields side by side; '*' marks the largest bound in each row.
print("f0 =", best_ct_bound("F4").value)
print(render_table({f: group_faces("F4", f) for f in ("F2", "F3", "F5")}))
