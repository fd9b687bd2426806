"""Replaying the case analysis for |- = As_2^2 (x |- x = x, x |- y = y).

Sixteen unknowns: a1..a8 for -|, b1..b8 for _|_.  Substitutions clear most
of them; what is left is a small system that splits on a6 and b6.

Run:  python demos/02_as22_case_analysis.py
"""

# %%
import time

from trias.catalog import get_assoc, get_entry
from trias.solver import generate_constraints, match_family, simplify

t = time.perf_counter()
system = generate_constraints(get_assoc("As_2^2"))
print(f"{len(system.equations)} distinct equations from the ten non-|- identities")

# %%
res = simplify(system)
cp = res.checkpoint
print("after substitution:")
print("  fixed  :", {v: str(p) for v, p in cp["assignment"].items()})
print("  residue:", [str(p) for p in cp["residual"]])

# %% The split tree
for fam in res.families:
    path = " -> ".join(f"{v}={r}" for _, v, r in fam.case_path)
    m = match_family(res, fam)
    print(f"  {path:18s} {m['entry']:11s} rename {m['rename']}")
    for line in get_entry(m["entry"]).describe():
        print("      ", line)
print(f"done in {time.perf_counter() - t:.3f}s")
