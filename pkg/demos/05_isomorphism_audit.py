"""Are the catalog classes pairwise distinct?

Over F_5 a pair can be settled by trying all 480 matrices of GL_2(F_5).  Any
coincidence comes with a witness, which we then try over Q(i).

Run:  python demos/05_isomorphism_audit.py
"""

# %%
import time
from collections import Counter

from trias.fields import fp
from trias.isomorphism import audit_pairwise, catalog_instances

F = fp(5)
insts = catalog_instances(2, F, "sample:2")
t = time.perf_counter()
rep = audit_pairwise(insts, F)
print(f"{len(insts)} instances, {len(rep['pairs'])} pairs in {time.perf_counter() - t:.2f}s")
print(Counter(p["result"] for p in rep["pairs"]))

# %%
for c in rep["collisions"][:12]:
    print(f"  {c['a']:28s} ~ {c['b']:28s} witness {c['witness']}  Q(i): {c['lift']}")
print(f"  ... {len(rep['collisions'])} collisions, {len(rep['cross_group'])} across |- groups")
