"""Eight catalog classes whose printed form breaks an identity.

Exact checks over Q(i) at sampled parameters, then a closer look at two of
them.

Run:  python demos/04_catalog_errata.py
"""

# %%
from trias.catalog import instantiate, validate_catalog
from trias.fields import QI
from trias.identities import AXIOMS, check_identity
from trias.poly import Poly

rep = validate_catalog(QI, samples=3)
print(f"{rep['passed']}/{rep['total']} classes pass")
for e in rep["entries"]:
    if not e["ok"]:
        f = e["failures"][0]
        v = f["violation"]
        args = ",".join(v["assignment"][k] for k in sorted(v["assignment"]))
        print(f"  {e['id']:11s} fails {f['failed']} first at {v['identity']}({args}) params {f['params']}")

# %% Class 4: A3 on (y, y, x) reads alpha x = x
for a in (1, 2):
    A = instantiate("Trias_2^4", {"alpha": a})
    print(f"Trias_2^4 alpha={a}: A3 violations = {len(check_identity(A, AXIOMS['A3']))}")

# %% Class 16: the two printed constraints have two solution branches
a, b1, b2, g1, g2 = (Poly.var(n) for n in ("alpha", "beta1", "beta2", "gamma1", "gamma2"))
branch_ok = g1 * g2 - b1 * b2
branch_bad = b2 * g2 - g1 ** 2
# their product is a combination of the two printed constraints
points = (dict(alpha=5, beta1=2, beta2=1, gamma1=2, gamma2=1),
          dict(alpha=3, beta1=2, beta2=1, gamma1=1, gamma2=1))
for vals in points:
    q = {k: Poly.const(v) for k, v in vals.items()}
    on = [str(b) for b in (branch_ok, branch_bad) if b.substitute(q).is_zero()]
    A = instantiate("Trias_2^16", vals)
    bad = [n for n, i in AXIOMS.items() if check_identity(A, i)]
    print(f"Trias_2^16 at {vals}: on branch {on}, failing identities {bad or 'none'}")
