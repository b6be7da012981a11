"""Independent sympy computations for values frozen in test_polyalg.cpp."""
from sympy import symbols, expand, resultant, discriminant, Poly, factor_list, real_roots, nroots, GF, factor_list as fl, sturm, Rational

z, b = symbols("z b")


def show(label, value):
    print(f"{label}: {value}")


show("mul", expand((z**2 + 3*z + 1) * (z**2 + 3*z + 3)))
show("mul at 1,2", [(1 + 3 + 1) * (1 + 3 + 3), (4 + 6 + 1) * (4 + 6 + 3)])
show("res z-b-1", expand(resultant(b**2 + 5*b + 5, z - b - 1, b)))
show("res z^2-bz+1", expand(resultant(b**2 + 5*b + 5, z**2 - b*z + 1, b)))
show("count z^3+4z^2+4z+2 in (-3,0)", len([r for r in real_roots(z**3 + 4*z**2 + 4*z + 2) if -3 < r < 0]))
show("roots z^3+5z^2+8z+5", nroots(z**3 + 5*z**2 + 8*z + 5, n=20))
for q in (2, 3, 5, 7):
    show(f"z^4+6z^3+12z^2+9z+1 mod {q}",
         [(Poly(f, z).degree(), m) for f, m in Poly(z**4 + 6*z**3 + 12*z**2 + 9*z + 1, z, modulus=q).factor_list()[1]])
show("z^2+3z+3 mod 2", Poly(z**2 + 3*z + 3, z, modulus=2).factor_list())
show("z^2+3z+3 mod 3", Poly(z**2 + 3*z + 3, z, modulus=3).factor_list())
show("z^4+4z^3+2z^2+z+1", factor_list(z**4 + 4*z**3 + 2*z**2 + z + 1))
show("z^6-1", factor_list(z**6 - 1))
show("(z^2+1)(z^3+z+1)^2", factor_list(expand((z**2 + 1) * (z**3 + z + 1)**2)))
show("x^4+1 (reducible mod every prime)", factor_list(z**4 + 1))
show("(z^2-2)(z^2-3)", factor_list(expand((z**2 - 2) * (z**2 - 3))))
