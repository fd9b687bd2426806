"""Dimension one, start to finish.

Fix x |- x (zero or x), write x -| x = a1 x and x _|_ x = b1 x, and let the
solver work out what the eleven identities allow.

Run:  python demos/01_dimension_one.py
"""

# %%
from trias.algebra import describe
from trias.catalog import get_assoc, instantiate, list_entries
from trias.identities import builtin_axioms, check_pack
from trias.solver import generate_constraints, match_family, solve

# %% The three classes and their products
for entry in list_entries(1):
    A = instantiate(entry.id)
    rep = check_pack(A, builtin_axioms())
    print(f"{entry.id:10s} {describe(A):40s} {rep.n_passed}/11 identities")

# %% Abelian |-: only a handful of identities say anything
sys = generate_constraints(get_assoc("As_1^1"))
for row in sys.to_json()["equations"]:
    print(f"  {row['poly']:16s} from {', '.join(row['sources'])}")

res = solve("As_1^1")
for fam in res.families:
    print("abelian |- :", fam.to_json(res.variables))
# b1 stays free; b1 = 0 is Trias_1^1 and any b1 != 0 rescales to Trias_1^2.

# %% x |- x = x: everything is forced
res = solve("As_1^2")
(fam,) = res.families
print("unit |-    :", fam.to_json(res.variables), "->", match_family(res, fam)["entry"])
