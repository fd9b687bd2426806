"""Brute force as a referee.

Over F_2 and F_3 every multiplication table can be listed.  Each
triassociative table found is matched, up to GL_2(F_p), to a catalog instance
with the same |- structure.

Run:  python demos/03_finite_field_oracle.py
"""

# %%
import time

from trias.solver import cross_check

print(f"{'group':8s} {'p':>2s} {'tables':>7s} {'matched':>8s}  notes")
t = time.perf_counter()
for p in (2, 3):
    for k in range(1, 8):
        rep = cross_check(f"As_2^{k}", p)
        notes = []
        if rep["instances_never_hit"]:
            notes.append(f"{len(rep['instances_never_hit'])} instances not triassociative")
        if rep["class_overlaps"]:
            notes.append(f"{len(rep['class_overlaps'])} overlapping class groups")
        print(f"As_2^{k:<3d} {p:2d} {rep['enumerated']:7d} {rep['matched']:8d}  {'; '.join(notes)}")
print(f"{time.perf_counter() - t:.1f}s")

# %% Where classes meet over F_3 in the abelian group
rep = cross_check("As_2^1", 3)
for classes, n in rep["class_overlaps"].items():
    print(f"  {n:3d} tables shared by {classes}")
