#!/usr/bin/env python3
"""Regenerate src/igusa_tables.cpp.

Expands the Igusa arithmetic invariants J2, J4, J6, J10 of the generic binary
sextic a0 x1^6 + a1 x1^5 x2 + ... + a6 x2^6 as polynomials in a0..a6.

Route: Clebsch invariants via classical transvectants, Igusa-Clebsch I_k from
the Clebsch values, then J2 = I2/8, J4 = (4 J2^2 - I4)/96,
J6 = (8 J2^3 - 160 J2 J4 - I6)/576, J10 = I10/4096.
"""
import sys
from math import comb, factorial

from sympy import QQ
from sympy.polys.rings import ring

R, *A = ring("a0,a1,a2,a3,a4,a5,a6", QQ)


def deriv(f, a, b):
    n = len(f) - 1
    out = [R(0)] * (n - a - b + 1)
    for i, c in enumerate(f):
        e1, e2 = n - i, i
        if e1 < a or e2 < b:
            continue
        k = factorial(e1) // factorial(e1 - a) * factorial(e2) // factorial(e2 - b)
        out[i - b] += c * k
    return out


def mul(f, g):
    out = [R(0)] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] += x * y
    return out


def transvectant(f, g, k):
    m, n = len(f) - 1, len(g) - 1
    out = [R(0)] * (m + n - 2 * k + 1)
    for j in range(k + 1):
        t = mul(deriv(f, k - j, j), deriv(g, j, k - j))
        for r in range(len(out)):
            out[r] += t[r] * ((-1) ** j * comb(k, j))
    s = QQ(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    return [c * s for c in out]


def main():
    f = list(A)
    i = transvectant(f, f, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(f, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    c2 = transvectant(f, f, 6)[0]
    c4 = transvectant(i, i, 4)[0]
    c6 = transvectant(i, delta, 4)[0]
    c10 = transvectant(y3, y1, 2)[0]
    i2 = -120 * c2
    i4 = -720 * c2**2 + 6750 * c4
    i6 = 8640 * c2**3 - 108000 * c2 * c4 + 202500 * c6
    i10 = (-62208 * c2**5 + 972000 * c2**3 * c4 + 1620000 * c2**2 * c6
           - 3037500 * c2 * c4**2 - 6075000 * c4 * c6 - 4556250 * c10)
    j2 = i2 / 8
    j4 = (4 * j2**2 - i4) / 96
    j6 = (8 * j2**3 - 160 * j2 * j4 - i6) / 576
    j10 = i10 / 4096

    out = sys.stdout
    out.write("// Generated by tools/gen_igusa_tables.py; do not edit.\n\n")
    out.write('#include "g2/igusa_tables.hpp"\n\nnamespace g2::igusa {\n')
    for name, poly, div in (("kJ2", j2, 4), ("kJ4", j4, 128),
                            ("kJ6", j6, 1024), ("kJ10", j10, 4096)):
        terms = sorted(poly.terms(), reverse=True)
        out.write(f"\nconst Term {name}[] = {{\n")
        for mono, coeff in terms:
            num = coeff * div
            assert num.denominator == 1, (name, mono, coeff)
            exps = ", ".join(str(e) for e in mono)
            out.write(f"    {{{{{exps}}}, {int(num.numerator)}}},\n")
        out.write("};\n")
    out.write("\nconst Table kTables[4] = {\n")
    out.write("    {kJ2, sizeof(kJ2) / sizeof(Term), 2},\n")
    out.write("    {kJ4, sizeof(kJ4) / sizeof(Term), 7},\n")
    out.write("    {kJ6, sizeof(kJ6) / sizeof(Term), 10},\n")
    out.write("    {kJ10, sizeof(kJ10) / sizeof(Term), 12},\n")
    out.write("};\n\n}  // namespace g2::igusa\n")


if __name__ == "__main__":
    main()
