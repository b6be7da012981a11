"""Independent check of data/catalog.json: q divides Res_b(m, p), gamma_approx is
near a root of q, and q is irreducible. Prints the cofactor Res/q per row."""
import json
import pathlib
import sympy as sp

z, b = sp.symbols("z b")
M = {3: b + 3, 4: b + 2, 5: b**2 + 5 * b + 5, 6: b + 1, 7: b**3 + 7 * b**2 + 14 * b + 7}
root = pathlib.Path(__file__).resolve().parents[2]
for r in json.load(open(root / "data" / "catalog.json")):
    n = r["n"]
    if n in (5, 7):
        p = sum(sp.Integer(c) * z**k * b**j for k, row in enumerate(r["poly"]) for j, c in enumerate(row))
        full = sp.Poly(sp.resultant(M[n], p, b), z)
    else:
        full = sp.Poly(sum(c * z**k for k, c in enumerate(r["poly"])), z)
    q = sp.Poly(sum(c * z**k for k, c in enumerate(r["expected"]["q_over_Q"])), z)
    g = complex(*r["gamma_approx"])
    dist = min(abs(complex(x) - g) for x in q.nroots())
    assert full.rem(q).is_zero and q.is_irreducible and dist < 5e-3, (n, r["i"])
    print(n, r["i"], sp.factor(full.quo(q).as_expr()))
