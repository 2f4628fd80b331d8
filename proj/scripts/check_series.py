#!/usr/bin/env python3
"""Verify a factored series printed by `latkit ehrhart` against a reference
rational function, by cross-multiplied polynomial identity.

Usage: latkit ehrhart FILE | check_series.py REF.json

REF.json holds {"numerator": [c0, c1, ...], "denominator": [[poly, e], ...]}
where poly is a coefficient list (constant term first), meaning
(sum c_i t^i) / prod poly(t)^e.  The latkit output's first line is
"n0 n1 ... ; d1 d2 ..." for (sum n_i t^i) / prod (1 - t^{d_j}); the check is
  ours_num * ref_den == ref_num * ours_den
as exact integer polynomials.
"""
import json
import sys


def pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def one_minus(k):
    p = [0] * (k + 1)
    p[0] = 1
    p[k] = -1
    return p


def main():
    ref = json.load(open(sys.argv[1]))
    head = sys.stdin.readline().strip()
    num_txt, den_txt = head.split(";")
    ours_num = [int(t) for t in num_txt.split()]
    ours_den = [1]
    for d in den_txt.split():
        ours_den = pmul(ours_den, one_minus(int(d)))
    ref_num = ref["numerator"]
    ref_den = [1]
    for poly, e in ref["denominator"]:
        for _ in range(e):
            ref_den = pmul(ref_den, poly)
    lhs = pmul(ours_num, ref_den)
    rhs = pmul(ref_num, ours_den)
    while lhs and lhs[-1] == 0:
        lhs.pop()
    while rhs and rhs[-1] == 0:
        rhs.pop()
    if lhs == rhs:
        print("series identity verified")
        return 0
    print("MISMATCH between computed series and reference")
    return 1


if __name__ == "__main__":
    sys.exit(main())
