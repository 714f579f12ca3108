"""Ordered surjection indices and the iterated pairings they generate.

An index tuple (i_l, ..., i_1) with i_1 < ... < i_l < n names a composite
of degeneracies s_{i_l} ... s_{i_1}; pairs of disjoint nonempty tuples feed
the bilinear pairings NH_{n-#a} (x) NH_{n-#b} -> NH_n built from the
adjoint action and the kernel generator maps.  The n=2 and n=3 pairings
also have expanded closed forms, checked against the composite definition
term by term.
"""

from __future__ import annotations

from itertools import combinations

from .hopf import hker_contains
from .linalg import Vec, vec_iadd
from .report import Report, VerificationError
from .simplicial import (MooreComplex, TruncatedSimplicialHopf,
                         generator_map_cols, _apply_cols)


def surj_key(alpha: tuple) -> tuple:
    """Sort key for the total order: compare from the smallest index, larger first."""
    return tuple(-i for i in reversed(alpha))


def enumerate_s(n: int):
    """All 2**n decreasing index tuples below n, totally ordered."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = []
    for l in range(n + 1):
        for combo in combinations(range(n), l):
            out.append(tuple(reversed(combo)))
    out.sort(key=surj_key)
    return out

def enumerate_p(n: int):
    """Disjoint pairs (alpha, beta) of nonempty tuples with beta < alpha."""
    s = [a for a in enumerate_s(n) if a]
    out = []
    for alpha in s:
        for beta in s:
            if surj_key(beta) < surj_key(alpha) and not set(alpha) & set(beta):
                out.append((alpha, beta))
    out.sort(key=lambda ab: (surj_key(ab[0]), surj_key(ab[1])))
    return out


def generator_map_f(t: TruncatedSimplicialHopf, k: int, i: int):
    """Columns of the kernel generator map f_i on H_k; image checked to lie in HKer(d_i)."""
    cols = generator_map_cols(t, k, i)
    face = t.face(k, i)
    for col in cols:
        if not hker_contains(face, col):
            raise VerificationError("generator map image escapes HKer(d_%d) at level %d" % (i, k))
    return cols


def moore_projection_cols(t: TruncatedSimplicialHopf, n: int):
    """Columns of the composite f_{n-1} ... f_0 on H_n."""
    comp = None
    for i in range(n):
        cols = generator_map_cols(t, n, i)
        comp = cols if comp is None else [_apply_cols(cols, c) for c in comp]
    if comp is None:
        h = t.level(0)
        comp = [h.basis_vec(i) for i in range(h.dim)]
    return comp


def apply_s_alpha(t: TruncatedSimplicialHopf, alpha: tuple, base_level: int, v: Vec) -> Vec:
    """Apply s_alpha = s_{i_l} ... s_{i_1} (rightmost first) starting at base_level."""
    level = base_level
    for idx in reversed(alpha):
        v = t.degeneracy(level, idx).apply(v)
        level += 1
    return v


def pairing(t: TruncatedSimplicialHopf, n: int, pair, moore: MooreComplex):
    """Evaluate the pairing for (alpha, beta) on Moore subspace bases.

    Returns ``{(i, j): vector in H_n coordinates}``; every value is verified
    to lie in NH_n.
    """
    alpha, beta = pair
    la, lb = len(alpha), len(beta)
    if not alpha or not beta:
        raise ValueError("pairing needs nonempty index tuples")
    h = t.level(n)
    src_a = moore.terms[n - la]
    src_b = moore.terms[n - lb]
    proj = moore_projection_cols(t, n)
    out = {}
    for i, x in enumerate(src_a.rows):
        u = apply_s_alpha(t, alpha, n - la, x)
        for j, y in enumerate(src_b.rows):
            v = apply_s_alpha(t, beta, n - lb, y)
            w = _apply_cols(proj, h.adjoint_vec(u, v))
            if not moore.terms[n].contains(w):
                raise VerificationError("pairing value escapes NH_%d at (%d, %d)" % (n, i, j))
            out[(i, j)] = w
    return out


# ---------------------------------------------------------------------------
# expanded forms at n = 2 and n = 3

def _leg_pairs(h, vec: Vec, m: int):
    return h.legs_vec(vec, m).items()


def _expanded_f01_level2(t, x: Vec, y: Vec) -> Vec:
    """sum (s0 x' ad s1 y') S(s1 x'' ad s1 y'')."""
    h1, h2 = t.level(1), t.level(2)
    s0, s1 = t.degeneracy(1, 0), t.degeneracy(1, 1)
    out = {}
    for (x1, x2), cx in h1.legs_vec(x, 2).items():
        for (y1, y2), cy in h1.legs_vec(y, 2).items():
            a = h2.adjoint_vec(s0.apply(h1.basis_vec(x1)), s1.apply(h1.basis_vec(y1)))
            b = h2.adjoint_vec(s1.apply(h1.basis_vec(x2)), s1.apply(h1.basis_vec(y2)))
            vec_iadd(out, h2.mul_vec(a, h2.antipode_vec(b)), cx * cy)
    return out


def _expanded_n3(t, name: str, x: Vec, y: Vec) -> Vec:
    """The six expanded pairing formulas at n = 3."""
    h3 = t.level(3)
    s0_2, s1_2, s2_2 = (t.degeneracy(2, j) for j in range(3))

    def s(j, v):
        return (s0_2, s1_2, s2_2)[j].apply(v)

    def s2of(j1, j0, v, base_level):
        return apply_s_alpha(t, (j1, j0), base_level, v)

    ad = h3.adjoint_vec
    S = h3.antipode_vec
    mul = h3.mul_vec
    out = {}

    if name == "(1,0)(2)":
        # x in NH_1, y in NH_2
        h1 = t.level(1)
        h2 = t.level(2)
        for (x1, x2), cx in h1.legs_vec(x, 2).items():
            sx1 = s2of(1, 0, h1.basis_vec(x1), 1)
            sx2 = s2of(2, 0, h1.basis_vec(x2), 1)
            for (y1, y2), cy in h2.legs_vec(y, 2).items():
                term = mul(ad(sx1, s(2, h2.basis_vec(y1))),
                           S(ad(sx2, s(2, h2.basis_vec(y2)))))
                vec_iadd(out, term, cx * cy)
        return out

    if name == "(2,0)(1)":
        h1 = t.level(1)
        h2 = t.level(2)
        for (x1, x2, x3, x4), cx in h1.legs_vec(x, 4).items():
            sx1 = s2of(2, 0, h1.basis_vec(x1), 1)
            sx2 = s2of(2, 1, h1.basis_vec(x2), 1)
            sx3 = s2of(2, 0, h1.basis_vec(x3), 1)
            sx4 = s2of(2, 1, h1.basis_vec(x4), 1)
            for (y1, y2, y3, y4), cy in h2.legs_vec(y, 4).items():
                t1 = ad(sx1, s(1, h2.basis_vec(y1)))
                t2 = S(ad(sx2, s(1, h2.basis_vec(y2))))
                t3 = S(mul(ad(sx3, s(2, h2.basis_vec(y3))),
                           S(ad(sx4, s(2, h2.basis_vec(y4))))))
                vec_iadd(out, mul(mul(t1, t2), t3), cx * cy)
        return out

    if name == "(0)(2,1)":
        h1 = t.level(1)
        h2 = t.level(2)
        for (x1, x2, x3), cx in h2.legs_vec(x, 3).items():
            for (y1, y2, y3, y4), cy in h1.legs_vec(y, 4).items():
                sy1 = s2of(2, 1, h1.basis_vec(y1), 1)
                sy2 = s2of(2, 1, h1.basis_vec(y2), 1)
                sy3 = s2of(2, 1, h1.basis_vec(y3), 1)
                sy4 = s2of(2, 1, h1.basis_vec(y4), 1)
                t1 = ad(s(0, h2.basis_vec(x1)), sy1)
                t2 = S(ad(s(1, h2.basis_vec(x2)), sy2))
                t3 = S(mul(sy3, S(ad(s(2, h2.basis_vec(x3)), sy4))))
                vec_iadd(out, mul(mul(t1, t2), t3), cx * cy)
        return out

    if name == "(0)(1)":
        h2 = t.level(2)
        for (x1, x2, x3), cx in h2.legs_vec(x, 3).items():
            for (y1, y2, y3, y4), cy in h2.legs_vec(y, 4).items():
                t1 = ad(s(0, h2.basis_vec(x1)), s(1, h2.basis_vec(y1)))
                t2 = S(ad(s(1, h2.basis_vec(x2)), s(1, h2.basis_vec(y2))))
                t3 = S(mul(s(2, h2.basis_vec(y3)),
                           S(ad(s(2, h2.basis_vec(x3)), s(2, h2.basis_vec(y4))))))
                vec_iadd(out, mul(mul(t1, t2), t3), cx * cy)
        return out

    if name == "(0)(2)":
        h2 = t.level(2)
        for (y1, y2), cy in h2.legs_vec(y, 2).items():
            term = mul(ad(s(0, x), s(2, h2.basis_vec(y1))),
                       S(s(2, h2.basis_vec(y2))))
            vec_iadd(out, term, cy)
        return out

    if name == "(1)(2)":
        h2 = t.level(2)
        for (x1, x2), cx in h2.legs_vec(x, 2).items():
            for (y1, y2), cy in h2.legs_vec(y, 2).items():
                term = mul(ad(s(1, h2.basis_vec(x1)), s(2, h2.basis_vec(y1))),
                           S(ad(s(2, h2.basis_vec(x2)), s(2, h2.basis_vec(y2)))))
                vec_iadd(out, term, cx * cy)
        return out

    raise ValueError("unknown expanded form %r" % name)


_N3_FORMS = {
    ((1, 0), (2,)): "(1,0)(2)",
    ((2, 0), (1,)): "(2,0)(1)",
    ((0,), (2, 1)): "(0)(2,1)",
    ((0,), (1,)): "(0)(1)",
    ((0,), (2,)): "(0)(2)",
    ((1,), (2,)): "(1)(2)",
}


def closed_form_check(t: TruncatedSimplicialHopf, n: int, moore: MooreComplex) -> Report:
    """Composite pairing vs expanded formula on every Moore basis pair."""
    rep = Report()
    if n == 2:
        pair = ((0,), (1,))
        comp = pairing(t, 2, pair, moore)
        src = moore.terms[1]
        ok = True
        wit = ""
        for i, x in enumerate(src.rows):
            for j, y in enumerate(src.rows):
                if comp[(i, j)] != _expanded_f01_level2(t, x, y):
                    ok = False
                    wit = "at basis pair (%d, %d)" % (i, j)
        rep.record("pairing/closed-form-(0)(1)@2", "level-2 pairing expansion", ok, wit)
        return rep
    if n == 3:
        for pair, name in _N3_FORMS.items():
            comp = pairing(t, 3, pair, moore)
            la, lb = len(pair[0]), len(pair[1])
            src_a = moore.terms[3 - la]
            src_b = moore.terms[3 - lb]
            ok = True
            wit = ""
            for i, x in enumerate(src_a.rows):
                for j, y in enumerate(src_b.rows):
                    if comp[(i, j)] != _expanded_n3(t, name, x, y):
                        ok = False
                        wit = "at basis pair (%d, %d)" % (i, j)
            rep.record("pairing/closed-form-%s@3" % name, "level-3 pairing expansion", ok, wit)
        return rep
    raise ValueError("closed forms available for n = 2 and n = 3 only")
