"""Independent reference computations used by the tests.

Nothing here calls the Riemann-Roch or intersection code under test.
"""

from fractions import Fraction


def gram(g, e, n):
    """Intersection matrix written down from the basis pairings."""
    rho = 2 + n
    G = [[0] * rho for _ in range(rho)]
    G[0][0] = -e
    G[0][1] = G[1][0] = 1
    for i in range(2, rho):
        G[i][i] = -1
    return G


def pair(G, v, w):
    return sum(v[i] * G[i][j] * w[j] for i in range(len(v)) for j in range(len(w)))


def chi_line_bundle(g, e, a, b):
    """χ(O(aσ + bf)) on F(g, e) by pushing forward to the base curve.

    For a >= 0, π_*O(aσ) has the degrees of O ⊕ O(-e) ⊕ ... ⊕ O(-ae) and no R¹,
    so χ = Σ_i χ_C(O(b - ie)). For a = -1 both direct images vanish. For
    a <= -2 use Serre duality with K = -2σ + (2g-2-e)f.
    """
    if a >= 0:
        return sum(b - i * e + 1 - g for i in range(a + 1))
    if a == -1:
        return 0
    return chi_line_bundle(g, e, -2 - a, 2 * g - 2 - e - b)


def chi_split_pair(g, e, A, B):
    """χ(⊕ O(A_i), ⊕ O(B_j)) = Σ χ(O(B_j - A_i)); classes as (a, b) pairs on F(g, e)."""
    return sum(chi_line_bundle(g, e, bj[0] - ai[0], bj[1] - ai[1]) for ai in A for bj in B)


def split_chern(G, classes):
    """(rank, c1, c2) of a direct sum of line bundles, c2 = Σ_{i<j} D_i·D_j."""
    rho = len(G)
    c1 = [sum(D[k] for D in classes) for k in range(rho)]
    c2 = sum(pair(G, classes[i], classes[j]) for i in range(len(classes)) for j in range(i + 1, len(classes)))
    return len(classes), c1, c2


def twist_by_chern_character(G, r, c1, c2, L):
    """Chern data of E ⊗ O(L) via ch(E ⊗ L) = ch(E)·ch(L)."""
    ch2 = Fraction(pair(G, c1, c1), 2) - c2
    new_c1 = [x + r * y for x, y in zip(c1, L)]
    new_ch2 = ch2 + pair(G, c1, L) + Fraction(r * pair(G, L, L), 2)
    new_c2 = Fraction(pair(G, new_c1, new_c1), 2) - new_ch2
    assert new_c2.denominator == 1
    return r, new_c1, int(new_c2)


def h1_p1(n):
    """h¹(P¹, O(n)) by Serre duality: h⁰(O(-n-2))."""
    return max(0, -n - 1)


def ext1_table(parts):
    return sum(h1_p1(aj - ai) for ai in parts for aj in parts)
