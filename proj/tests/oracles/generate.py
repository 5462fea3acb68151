"""Regenerates tests/unit/oracle_data.hpp from first principles.

Alexander polynomials come from a symbolic determinant (sympy), signatures from
dense hermitian eigenvalues (numpy), both on the textbook pencil definitions.
Nothing here shares code with the C++ library.

    python3 tests/oracles/generate.py > tests/unit/oracle_data.hpp
"""
import random
from fractions import Fraction

import numpy as np
import sympy as sp

t = sp.symbols("t")


def alexander(S, n):
    M = sp.Matrix(S)
    eps = 1 if n % 2 == 0 else -1
    p = sp.Poly(sp.expand((t * M + eps * M.T).det()), t)
    if p.is_zero:
        return None
    c = p.all_coeffs()[::-1]  # ascending
    while c and c[0] == 0:
        c.pop(0)
    g = 0
    for x in c:
        g = sp.gcd(g, x)
    c = [x / g for x in c]
    if c[-1] < 0:
        c = [-x for x in c]
    return [int(x) for x in c]


def signature(S, n, alpha):
    A = np.array(S, dtype=float)
    xi = np.exp(2j * np.pi * alpha)
    H = (1 - xi) * A + (-1) ** (n + 1) * (1 - np.conj(xi)) * A.T
    if n % 2 == 0:
        H = 1j * H
    w = np.linalg.eigvalsh((H + H.conj().T) / 2)
    tol = 1e-8 * max(1.0, np.abs(w).max())
    return int((w > tol).sum() - (w < -tol).sum()), int((abs(w) <= tol).sum())


def main():
    rng = random.Random(20240611)
    cases = []
    while len(cases) < 24:
        size = rng.randint(1, 6)
        n = rng.randint(1, 4)
        S = [[rng.randint(-3, 3) for _ in range(size)] for _ in range(size)]
        if sp.Matrix(S).det() == 0:
            continue
        delta = alexander(S, n)
        alphas = [Fraction(1, 2), Fraction(1, 3), Fraction(1, 7), Fraction(5, 8)]
        sig = []
        for a in alphas:
            s, z = signature(S, n, float(a))
            sig.append((a, s, z))
        cases.append((n, S, delta, sig))

    print("#pragma once")
    print("// Generated by tests/oracles/generate.py; do not edit by hand.")
    print("#include <vector>")
    print()
    print("namespace oracle {")
    print()
    print("struct SignatureSample { long num, den; long sigma; long nullity; };")
    print("struct Case {")
    print("  int n;")
    print("  std::vector<std::vector<long long>> matrix;")
    print("  std::vector<long long> alexander;  // ascending")
    print("  std::vector<SignatureSample> samples;")
    print("};")
    print()
    print("inline const std::vector<Case>& cases() {")
    print("  static const std::vector<Case> data = {")
    for n, S, delta, sig in cases:
        rows = ", ".join("{" + ", ".join(str(x) for x in r) + "}" for r in S)
        d = ", ".join(str(x) for x in delta)
        smp = ", ".join(f"{{{a.numerator}, {a.denominator}, {s}, {z}}}" for a, s, z in sig)
        print(f"      {{{n}, {{{rows}}}, {{{d}}}, {{{smp}}}}},")
    print("  };")
    print("  return data;")
    print("}")
    print()
    print("}  // namespace oracle")


if __name__ == "__main__":
    main()
