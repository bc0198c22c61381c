"""Offline oracle for the demo number fields in data/fields/.

Computes a primitive element's minimal polynomial, the coordinates of the
named generators in the power basis of the primitive element, and the image
of the primitive element under complex conjugation. Requires sympy. The C++
build never runs this script; it only consumes the JSON it produced.
"""
import json

from sympy import I, QQ, Poly, Rational, conjugate, exp, expand, minimal_polynomial, pi, rem, symbols

x, t = symbols("x t")


def describe(primitive, named, conj_image):
    field = QQ.algebraic_field(primitive)
    mp = Poly(minimal_polynomial(primitive, x), x).monic()
    m = mp.degree()

    def coords(expr):
        cs = [Rational(str(c)) for c in field.from_sympy(expr).rep]
        cs = list(reversed(cs))
        return cs + [Rational(0)] * (m - len(cs))

    out = {
        "min_poly": [str(c) for c in reversed(mp.all_coeffs())],
        "conjugation": [str(c) for c in coords(conj_image)],
        "elements": {k: [str(c) for c in coords(e)] for k, e in named.items()},
    }
    modulus = mp.as_expr().subs(x, t)

    def as_poly(cs):
        return sum(Rational(c) * t**i for i, c in enumerate(cs))

    def reduce(p):
        return rem(expand(p), modulus, t)

    return out, as_poly, reduce


def main():
    theta = 3 ** Rational(-1, 4) * exp(I * pi / 4)
    k3, P, red = describe(theta + I, {"theta": theta, "i": I}, expand(-I * theta - I))
    assert red(P(k3["elements"]["theta"]) ** 4 + Rational(1, 3)) == 0
    assert red(P(k3["elements"]["i"]) ** 2 + 1) == 0
    print("q_theta_i", json.dumps(k3))

    omega = exp(2 * I * pi / 3)
    cbrt3 = 3 ** Rational(1, 3)
    cubic, P, red = describe(omega + cbrt3, {"omega": omega, "inv_cbrt3": 1 / cbrt3}, conjugate(omega) + cbrt3)
    assert red(P(cubic["elements"]["omega"]) ** 2 + P(cubic["elements"]["omega"]) + 1) == 0
    assert red(P(cubic["elements"]["inv_cbrt3"]) ** 3 - Rational(1, 3)) == 0
    print("q_omega_cbrt3", json.dumps(cubic))


if __name__ == "__main__":
    main()
