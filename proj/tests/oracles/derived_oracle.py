"""Independent values for the unit tests: field discriminants (p-maximal
enlargement by search, no Dedekind criterion or Round 2),
zeta_K(2) by Euler product with sympy factorization mod p, distance formulas and
matrix realizations in mpmath. Output is pasted into the tests and frozen."""
import json
import pathlib

import mpmath as mp
import sympy as sp
from fractions import Fraction
from itertools import product

mp.mp.prec = 200
z = sp.symbols("z")
root = pathlib.Path(__file__).resolve().parents[2]


def mult_matrix(x, f):
    """Matrix of multiplication by x (power-basis coordinates) modulo monic f."""
    n = len(f) - 1
    cols = []
    cur = list(x)
    for _ in range(n):
        cols.append(cur)
        # cur * theta mod f
        nxt = [Fraction(0)] + cur[:-1]
        top = cur[-1]
        nxt = [nxt[i] - top * f[i] for i in range(n)]
        cur = nxt
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def charpoly_integral(M):
    """Faddeev-LeVerrier; True when every coefficient is an integer."""
    n = len(M)
    A = [row[:] for row in M]
    for k in range(1, n + 1):
        c = -sum(A[i][i] for i in range(n)) / k
        if c.denominator != 1:
            return False
        if k == n:
            return True
        A = [[sum(M[i][l] * (A[l][j] + (c if l == j else 0)) for l in range(n)) for j in range(n)] for i in range(n)]


def mat_vec(M, v):
    return [sum(M[i][j] * v[j] for j in range(len(v))) for i in range(len(M))]


def trace_form(basis, f):
    n = len(basis)
    mats = [mult_matrix(b, f) for b in basis]
    T = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = mat_vec(mats[i], basis[j])
            row.append(sum(mult_matrix(prod, f)[k][k] for k in range(n)))
        T.append(row)
    return T


def kernel_mod_p(T, p):
    """Basis of {c : c T = 0 mod p} by row reduction of T^t."""
    n = len(T)
    A = [[int(T[j][i]) % p for j in range(n)] for i in range(n)]  # rows of T^t
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, n) if A[i][col]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = pow(A[r][col], -1, p)
        A[r] = [x * inv % p for x in A[r]]
        for i in range(n):
            if i != r and A[i][col]:
                A[i] = [(x - A[i][col] * y) % p for x, y in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    out = []
    for fc in free:
        v = [0] * n
        v[fc] = 1
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fc] % p
        out.append(v)
    return out


def field_disc(coeffs):
    """disc(f) / index^2, the index found by enlarging Z[theta] one p-step at a
    time. Candidates x = c/p are limited to c with tr(x b) integral for every
    basis element b; charpoly integrality then decides."""
    f = [Fraction(c) for c in coeffs]
    n = len(coeffs) - 1
    T = sp.Poly(sum(c * z**k for k, c in enumerate(coeffs)), z)
    d = int(sp.discriminant(T))
    index = 1
    for p, e in sp.factorint(abs(d)).items():
        if e < 2:
            continue
        basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        grown = True
        while grown:
            grown = False
            ker = kernel_mod_p(trace_form(basis, f), p)
            for coef in product(range(p), repeat=len(ker)):
                c = [sum(a * v[i] for a, v in zip(coef, ker)) % p for i in range(n)]
                nz = [v for v in c if v]
                if not nz or nz[0] != 1:
                    continue  # one representative per line
                x = [sum(c[i] * basis[i][k] for i in range(n)) / p for k in range(n)]
                if charpoly_integral(mult_matrix(x, f)):
                    j = max(i for i in range(n) if c[i])
                    basis[j] = x
                    index *= p
                    grown = True
                    break
    return d // (index * index)


def zeta2(coeffs, bound):
    T = sp.Poly(sum(c * z**k for k, c in enumerate(coeffs)), z)
    d = int(sp.discriminant(T))
    val = mp.mpf(1)
    for p in sp.primerange(2, bound + 1):
        if d % p == 0:
            continue  # index/ramified primes handled separately below
        for f, e in sp.factor_list(T, modulus=p)[1]:
            val /= 1 - mp.mpf(p) ** (-2 * f.degree())
    return val


print("field discriminants of the catalog q:")
for r in json.load(open(root / "data" / "catalog.json")):
    q = r["expected"]["q_over_Q"]
    if len(q) >= 3:
        print(r["n"], r["i"], field_disc(q))

# z^4+6z^3+12z^2+9z+1: disc -275 = -5^2 * 11, neither 5 nor 11 an index prime;
# 5 = P^2 (norm 5), 11 = P^2 Q Q' style splitting read off sympy directly
T = sp.Poly(z**4 + 6 * z**3 + 12 * z**2 + 9 * z + 1, z)
val = zeta2([1, 9, 12, 6, 1], 20000)
for p in (5, 11):
    for f, e in sp.factor_list(T, modulus=p)[1]:
        val /= 1 - mp.mpf(p) ** (-2 * f.degree())
print("zeta2(-275 field, B=2e4) =", mp.nstr(val, 12))
print("quartic covolume =", mp.nstr(mp.mpf(275) ** 1.5 * val / (2**7 * mp.pi**6), 10))

# distances
def axial(g, b, b2):
    x = 4 * g / (b * b2)
    return mp.acosh(abs(x + 1) + abs(x)) / 2


print("axial(i,-1,-4) =", mp.nstr(axial(mp.mpc(0, 1), -1, -4), 10))
print("axial(-1.5+.6066i,-3,-4) =", mp.nstr(axial(mp.mpc(-1.5, 0.6066), -3, -4), 10))
print("conj_axis(i,-1) =", mp.nstr(mp.acosh((abs(mp.mpc(0, 1) + 1) + 1) / 1), 10))

# realization for gamma = i, beta = -2
g, b = mp.mpc(0, 1), mp.mpf(-2)
t = mp.sqrt(b + 4)
u = (t + mp.sqrt(b)) / 2
a = mp.sqrt(g / b - 1)
F = mp.matrix([[u, 0], [0, 1 / u]])
G = mp.matrix([[a, 1], [-1 - a * a, -a]])
C = F * G * mp.inverse(F) * mp.inverse(G)
print("tr F =", mp.nstr(F[0, 0] + F[1, 1], 15), " tr[F,G] =", mp.nstr(C[0, 0] + C[1, 1], 15))
