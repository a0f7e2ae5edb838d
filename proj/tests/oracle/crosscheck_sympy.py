#!/usr/bin/env python3
"""Third route cross-check with sympy Groebner bases over QQ.

Checks the paper-example ring values that the linear-algebra oracle
disputes: socle dimensions of R/q^{n+1} and the colon ideal q : m.
"""

import sympy as sp
from sympy import groebner, symbols, Poly

x, y, z, w, t = symbols("x y z w t")
VARS = (x, y, z, w)

J = [x * w, y * w, z * w]
q = [x - w, y - w, z - w]


def ideal_mul(a, b):
    return [f * g for f in a for g in b]


def std_monomials(G, gens):
    """Standard monomials of a zero-dimensional ideal (grevlex)."""
    lts = [Poly(g, gens).LM(order="grevlex") for g in G.polys]
    # bounds: pure powers must exist
    bounds = []
    for i, v in enumerate(gens):
        b = None
        for m in lts:
            e = m.exponents
            if all(ej == 0 for j, ej in enumerate(e) if j != i):
                b = e[i] if b is None else min(b, e[i])
        assert b is not None, "not zero-dimensional"
        bounds.append(b)
    out = []

    def divides(m, e):
        return all(a <= b for a, b in zip(m.exponents, e))

    import itertools
    for e in itertools.product(*[range(b) for b in bounds]):
        if not any(divides(m, e) for m in lts):
            out.append(e)
    return out


def length(ideal):
    G = groebner(ideal, *VARS, order="grevlex")
    return len(std_monomials(G, VARS))


def socle_dim(ideal):
    """dim of (K:m)/K by linear algebra over the standard basis."""
    G = groebner(ideal, *VARS, order="grevlex")
    basis = std_monomials(G, VARS)
    idx = {e: i for i, e in enumerate(basis)}
    rows = []
    for e in basis:
        constraint = []
        for v in VARS:
            mono = sp.prod(vv ** ee for vv, ee in zip(VARS, e)) * v
            nf = G.reduce(mono)[1]
            vec = [0] * len(basis)
            p = Poly(nf, VARS)
            for mexp, c in zip(p.monoms(), p.coeffs()):
                vec[idx[tuple(mexp)]] = c
            constraint.extend(vec)
        rows.append(constraint)
    M = sp.Matrix(rows)
    return len(basis) - M.rank()


def main():
    for n in range(0, 4):
        qn = [1]
        for _ in range(n + 1):
            qn = ideal_mul(qn, q)
        K = J + qn
        print(f"n={n}: l(R/q^{n+1}) = {length(K)}  soc = {socle_dim(K)}")

    # colon (J+q) : m  -- expect = m  (so q : m = m in R)
    K = groebner(J + q, *VARS, order="grevlex")
    print("GB(J+q):", list(K.exprs))
    # check x in q:m : x*v in J+q for all v?
    for f in (x, y, z, w):
        ok = all(K.reduce(f * v)[1] == 0 for v in VARS)
        print(f"  {f} in (J+q):m :", ok)


if __name__ == "__main__":
    main()
