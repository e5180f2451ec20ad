"""H_1 of cyclic branched covers from the Alexander polynomial.

For knots with cyclic Alexander module Z[t^{+-1}]/(Delta) (true for 2-bridge
and torus knots), H_1(L_n) is the cokernel of multiplication by Delta on
Z[t]/(t^n - 1), i.e. of a circulant integer matrix. Smith form via sympy.
"""
import json
import sys

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

KNOTS = {
    "trefoil": [1, -1, 1],
    "figure_eight": [1, -3, 1],
    "cinquefoil": [1, -1, 1, -1, 1],
}


def circulant(coeffs, n):
    m = [[0] * n for _ in range(n)]
    for col in range(n):
        for e, c in enumerate(coeffs):
            m[(col + e) % n][col] += c
    return Matrix(m)


def divisors(coeffs, n):
    s = smith_normal_form(circulant(coeffs, n), domain=ZZ)
    d = sorted(abs(int(s[i, i])) for i in range(n))
    # zeros (free part) go last, units are dropped
    nz = [x for x in d if x not in (0, 1)]
    return nz + [0] * d.count(0)


def main():
    out = {}
    for name, coeffs in KNOTS.items():
        for n in (2, 3, 5, 6):
            out[f"{name}_n{n}"] = divisors(coeffs, n)
    json.dump(out, sys.stdout, indent=2, sort_keys=True)
    print()


if __name__ == "__main__":
    main()
