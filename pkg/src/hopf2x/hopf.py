"""Finite-dimensional Hopf algebras over an exact field.

A :class:`HopfAlgebra` carries its structure maps as per-basis callables
with memoization, so the same interface serves explicitly tabulated
algebras and lazily factored smash products.  Vectors are sparse dicts in
the basis coordinates; 2-tensors are dicts keyed by index pairs.

Axioms are never assumed: :func:`verify_hopf` and :func:`verify_morphism`
check every law on all basis tuples, and subspaces claimed to be
sub-Hopf algebras are re-verified whenever they are used.
"""

from __future__ import annotations

from .config import MEMO_PAIR_DIM, Caps, DEFAULT_CAPS
from .fields import Field
from .linalg import (DenseMatrix, Subspace, Trilinear, Vec, kernel_from_cols,
                     vec_iadd, vec_scale, vec_sub)
from .report import Report, VerificationError, CapExceeded


class ClosureError(VerificationError):
    """A subspace failed to be closed under the Hopf structure maps."""


def _tensor2_iadd(acc, a: Vec, b: Vec, c=None) -> None:
    """acc += c * (a (x) b) on pair-keyed dicts."""
    for i, x in a.items():
        cx = x if c is None else c * x
        for j, y in b.items():
            key = (i, j)
            s = acc.get(key)
            t = cx * y
            s = t if s is None else s + t
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)


class HopfAlgebra:
    """Bialgebra with antipode, given per-basis structure maps.

    ``mul(i, j)`` returns the product of basis vectors as a sparse vector,
    ``comul(i)`` the coproduct as a pair-keyed dict, ``counit(i)`` a scalar,
    ``antipode(i)`` a sparse vector; ``unit`` is the sparse vector of 1.
    """

    def __init__(self, field: Field, labels, mul, comul, counit, antipode,
                 unit: Vec, cocommutative: bool = True, factors=None):
        self.field = field
        self.labels = list(labels)
        self.dim = len(self.labels)
        self._mul_impl = mul
        self._comul_impl = comul
        self._counit_impl = counit
        self._antipode_impl = antipode
        self._unit = dict(unit)
        self.cocommutative = cocommutative
        # (carrier, acting, action) when this algebra is a smash product
        self.factors = factors
        self._mul_memo = {} if self.dim <= MEMO_PAIR_DIM else None
        self._adj_memo = {} if self.dim <= MEMO_PAIR_DIM else None
        self._comul_memo = {}
        self._antipode_memo = {}
        self._counit_memo = {}
        self._legs_memo = {}

    # -- basis-level structure maps -------------------------------------

    def mul_basis(self, i: int, j: int) -> Vec:
        memo = self._mul_memo
        if memo is None:
            return self._mul_impl(i, j)
        key = (i, j)
        v = memo.get(key)
        if v is None:
            v = self._mul_impl(i, j)
            memo[key] = v
        return v

    def comul_basis(self, i: int) -> dict:
        v = self._comul_memo.get(i)
        if v is None:
            v = self._comul_impl(i)
            self._comul_memo[i] = v
        return v

    def counit_basis(self, i: int):
        v = self._counit_memo.get(i)
        if v is None:
            v = self._counit_impl(i)
            self._counit_memo[i] = v
        return v

    def antipode_basis(self, i: int) -> Vec:
        v = self._antipode_memo.get(i)
        if v is None:
            v = self._antipode_impl(i)
            self._antipode_memo[i] = v
        return v

    def unit_vec(self) -> Vec:
        return self._unit

    def basis_vec(self, i: int) -> Vec:
        return {i: self.field.one}

    # -- vector-level extensions ----------------------------------------

    def mul_vec(self, u: Vec, v: Vec) -> Vec:
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                vec_iadd(out, self.mul_basis(i, j), x * y)
        return out

    def mul_many(self, vecs) -> Vec:
        out = None
        for v in vecs:
            out = v if out is None else self.mul_vec(out, v)
        return self._unit if out is None else out

    def comul_vec(self, v: Vec) -> dict:
        out = {}
        for i, x in v.items():
            for key, c in self.comul_basis(i).items():
                s = out.get(key)
                t = x * c
                s = t if s is None else s + t
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return out

    def counit_vec(self, v: Vec):
        total = self.field.zero
        for i, x in v.items():
            total = total + x * self.counit_basis(i)
        return total

    def antipode_vec(self, v: Vec) -> Vec:
        out = {}
        for i, x in v.items():
            vec_iadd(out, self.antipode_basis(i), x)
        return out

    def legs_basis(self, i: int, m: int) -> dict:
        """Iterated coproduct of e_i into m tensor legs, keyed by index tuples."""
        if m == 1:
            return {(i,): self.field.one}
        key = (i, m)
        v = self._legs_memo.get(key)
        if v is None:
            v = {}
            for (a, b), c in self.comul_basis(i).items():
                for t, d in self.legs_basis(a, m - 1).items():
                    tup = t + (b,)
                    s = v.get(tup)
                    t2 = c * d
                    s = t2 if s is None else s + t2
                    if s:
                        v[tup] = s
                    else:
                        v.pop(tup, None)
            self._legs_memo[key] = v
        return v

    def legs_vec(self, v: Vec, m: int) -> dict:
        out = {}
        for i, x in v.items():
            for tup, c in self.legs_basis(i, m).items():
                s = out.get(tup)
                t = x * c
                s = t if s is None else s + t
                if s:
                    out[tup] = s
                else:
                    out.pop(tup, None)
        return out

    def adjoint_basis(self, i: int, j: int) -> Vec:
        """e_i acting on e_j by x (x) y -> sum x' y S(x'')."""
        memo = self._adj_memo
        if memo is not None:
            v = memo.get((i, j))
            if v is not None:
                return v
        out = {}
        for (a, b), c in self.comul_basis(i).items():
            vec_iadd(out, self.mul_vec(self.mul_basis(a, j), self.antipode_basis(b)), c)
        if memo is not None:
            memo[(i, j)] = out
        return out

    def adjoint_vec(self, u: Vec, v: Vec) -> Vec:
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                vec_iadd(out, self.adjoint_basis(i, j), x * y)
        return out

    def label(self, i: int) -> str:
        return self.labels[i]

    def fmt_vec(self, v: Vec) -> str:
        if not v:
            return "0"
        parts = []
        for i in sorted(v):
            parts.append("%s*%s" % (self.field.to_str(v[i]), self.labels[i]))
        return " + ".join(parts)

    def __repr__(self):
        return "HopfAlgebra(dim %d over %r)" % (self.dim, self.field)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_tables(cls, field: Field, labels, mul, comul, counit, antipode,
                    unit=None, cocommutative: bool = True) -> "HopfAlgebra":
        """Build from dense tables.

        ``mul[i][j][k]``: coefficient of e_k in e_i e_j (or a Trilinear);
        ``comul[i][j][k]``: coefficient of e_j (x) e_k in the coproduct of e_i;
        ``counit[i]``: scalar; ``antipode``: square matrix with S(e_c) in
        column c (or nested rows); ``unit``: coefficient list of 1 (defaults
        to the unique basis vector with counit 1 among idempotents when
        omitted -- pass it explicitly for anything nontrivial).
        """
        d = len(labels)
        if isinstance(mul, Trilinear):
            mul = mul.to_nested()
        mul_table = {}
        for i in range(d):
            for j in range(d):
                row = mul[i][j]
                v = {k: row[k] for k in range(d) if row[k]}
                mul_table[(i, j)] = v
        comul_table = {}
        for i in range(d):
            t = {}
            for j in range(d):
                for k in range(d):
                    c = comul[i][j][k]
                    if c:
                        t[(j, k)] = c
            comul_table[i] = t
        if isinstance(antipode, DenseMatrix):
            s_cols = antipode.sparse_cols()
        else:
            s_cols = [{r: antipode[r][c] for r in range(d) if antipode[r][c]} for c in range(d)]
        if unit is None:
            raise ValueError("explicit unit vector required")
        unit_vec = {i: c for i, c in enumerate(unit) if c}
        return cls(field, labels,
                   lambda i, j: mul_table[(i, j)],
                   lambda i: comul_table[i],
                   lambda i: counit[i],
                   lambda i: s_cols[i],
                   unit_vec, cocommutative=cocommutative)

    def to_tables(self, caps: Caps = DEFAULT_CAPS):
        """Dense export (mul, comul, counit, antipode, unit); guarded by the cap."""
        d = self.dim
        if d ** 3 > caps.materialize:
            raise CapExceeded("dense tables for dim %d exceed cap %d" % (d, caps.materialize))
        z = self.field.zero
        mul = [[[z] * d for _ in range(d)] for _ in range(d)]
        comul = [[[z] * d for _ in range(d)] for _ in range(d)]
        counit = [self.counit_basis(i) for i in range(d)]
        anti = [[z] * d for _ in range(d)]
        unit = [z] * d
        for i in range(d):
            for j in range(d):
                for k, c in self.mul_basis(i, j).items():
                    mul[i][j][k] = c
            for (j, k), c in self.comul_basis(i).items():
                comul[i][j][k] = c
            for r, c in self.antipode_basis(i).items():
                anti[r][i] = c
        for i, c in self._unit.items():
            unit[i] = c
        return mul, comul, counit, anti, unit


def unit_algebra(field: Field) -> HopfAlgebra:
    """The base field as a one-dimensional Hopf algebra (the zero object)."""
    one = field.one
    return HopfAlgebra(field, ["1"],
                       lambda i, j: {0: one},
                       lambda i: {(0, 0): one},
                       lambda i: one,
                       lambda i: {0: one},
                       {0: one})


# ---------------------------------------------------------------------------
# morphisms

class HopfMorphism:
    """Linear map between Hopf algebras, stored as images of basis vectors."""

    __slots__ = ("source", "target", "cols")

    def __init__(self, source: HopfAlgebra, target: HopfAlgebra, cols):
        if len(cols) != source.dim:
            raise ValueError("expected %d columns, got %d" % (source.dim, len(cols)))
        self.source = source
        self.target = target
        self.cols = [dict(c) for c in cols]

    @classmethod
    def identity(cls, h: HopfAlgebra) -> "HopfMorphism":
        return cls(h, h, [h.basis_vec(i) for i in range(h.dim)])

    @classmethod
    def from_matrix(cls, source: HopfAlgebra, target: HopfAlgebra, m: DenseMatrix) -> "HopfMorphism":
        if m.rows != target.dim or m.cols != source.dim:
            raise ValueError("matrix shape mismatch")
        return cls(source, target, m.sparse_cols())

    @property
    def matrix(self) -> DenseMatrix:
        return DenseMatrix.from_cols(self.source.field, self.cols, self.target.dim)

    def apply(self, v: Vec) -> Vec:
        out = {}
        for j, x in v.items():
            vec_iadd(out, self.cols[j], x)
        return out

    def apply2(self, t: dict) -> dict:
        """(f (x) f) on a pair-keyed 2-tensor."""
        out = {}
        for (i, j), c in t.items():
            _tensor2_iadd(out, self.cols[i], self.cols[j], c)
        return out

    def compose(self, other: "HopfMorphism") -> "HopfMorphism":
        """self after other."""
        if other.target is not self.source:
            raise ValueError("composition source/target mismatch")
        return HopfMorphism(other.source, self.target, [self.apply(c) for c in other.cols])

    def is_identity(self) -> bool:
        if self.source.dim != self.target.dim:
            return False
        one = self.source.field.one
        return all(c == {i: one} for i, c in enumerate(self.cols))

    def __eq__(self, other):
        return (isinstance(other, HopfMorphism) and self.source is other.source
                and self.target is other.target and self.cols == other.cols)

    def __repr__(self):
        return "HopfMorphism(%d -> %d)" % (self.source.dim, self.target.dim)


def identity_morphism(h: HopfAlgebra) -> HopfMorphism:
    return HopfMorphism.identity(h)


def zero_morphism(a: HopfAlgebra, b: HopfAlgebra) -> HopfMorphism:
    """The composite of the counit of a with the unit of b."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    unit = b.unit_vec()
    return HopfMorphism(a, b, [vec_scale(unit, a.counit_basis(i)) for i in range(a.dim)])


# ---------------------------------------------------------------------------
# axiom verification

def verify_hopf(h: HopfAlgebra) -> Report:
    """Check all bialgebra-with-antipode laws on basis tuples.

    Scans each axiom family over all tuples and records the first failing
    tuple as witness; failures are reported, never raised.
    """
    rep = Report()
    d = h.dim
    one = h.unit_vec()
    idx = range(d)

    def fail(cid, anchor, tup, lhs, rhs):
        rep.failed(cid, anchor, "at %s: lhs=%s rhs=%s" %
                   ("(" + ", ".join(h.labels[t] for t in tup) + ")", lhs, rhs))

    ok = True
    for i in idx:
        if not ok:
            break
        for j in idx:
            if not ok:
                break
            for k in idx:
                lhs = h.mul_vec(h.mul_basis(i, j), h.basis_vec(k))
                rhs = h.mul_vec(h.basis_vec(i), h.mul_basis(j, k))
                if lhs != rhs:
                    fail("algebra/associativity", "product is associative", (i, j, k),
                         h.fmt_vec(lhs), h.fmt_vec(rhs))
                    ok = False
                    break
    if ok:
        rep.passed("algebra/associativity", "product is associative")

    ok = True
    for i in idx:
        l = h.mul_vec(one, h.basis_vec(i))
        r = h.mul_vec(h.basis_vec(i), one)
        if l != h.basis_vec(i) or r != h.basis_vec(i):
            fail("algebra/unit", "1 is a two-sided unit", (i,), h.fmt_vec(l), h.fmt_vec(r))
            ok = False
            break
    if ok:
        rep.passed("algebra/unit", "1 is a two-sided unit")

    ok = True
    for i in idx:
        left = {}
        right = {}
        for (a, b), c in h.comul_basis(i).items():
            for (x, y), c2 in h.comul_basis(a).items():
                key = (x, y, b)
                s = left.get(key)
                t = c * c2
                s = t if s is None else s + t
                if s:
                    left[key] = s
                else:
                    left.pop(key, None)
            for (x, y), c2 in h.comul_basis(b).items():
                key = (a, x, y)
                s = right.get(key)
                t = c * c2
                s = t if s is None else s + t
                if s:
                    right[key] = s
                else:
                    right.pop(key, None)
        if left != right:
            fail("coalgebra/coassociativity", "coproduct is coassociative", (i,), left, right)
            ok = False
            break
    if ok:
        rep.passed("coalgebra/coassociativity", "coproduct is coassociative")

    ok = True
    for i in idx:
        l = {}
        r = {}
        for (a, b), c in h.comul_basis(i).items():
            vec_iadd(l, h.basis_vec(b), c * h.counit_basis(a))
            vec_iadd(r, h.basis_vec(a), c * h.counit_basis(b))
        e = h.basis_vec(i)
        if l != e or r != e:
            fail("coalgebra/counit", "counit laws", (i,), h.fmt_vec(l), h.fmt_vec(r))
            ok = False
            break
    if ok:
        rep.passed("coalgebra/counit", "counit laws")

    ok = True
    for i in idx:
        if not ok:
            break
        for j in idx:
            lhs = h.comul_vec(h.mul_basis(i, j))
            rhs = {}
            for (a, b), c in h.comul_basis(i).items():
                for (x, y), c2 in h.comul_basis(j).items():
                    _tensor2_iadd(rhs, h.mul_basis(a, x), h.mul_basis(b, y), c * c2)
            if lhs != rhs:
                fail("bialgebra/comul-multiplicative", "coproduct is an algebra map",
                     (i, j), lhs, rhs)
                ok = False
                break
    if ok:
        du = h.comul_vec(one)
        expect = {}
        _tensor2_iadd(expect, one, one)
        if du != expect:
            rep.failed("bialgebra/comul-multiplicative", "coproduct is an algebra map",
                       "coproduct of 1 is not 1 (x) 1")
        else:
            rep.passed("bialgebra/comul-multiplicative", "coproduct is an algebra map")

    ok = True
    for i in idx:
        if not ok:
            break
        for j in idx:
            lhs = h.counit_vec(h.mul_basis(i, j))
            rhs = h.counit_basis(i) * h.counit_basis(j)
            if lhs != rhs:
                fail("bialgebra/counit-multiplicative", "counit is an algebra map",
                     (i, j), lhs, rhs)
                ok = False
                break
    if ok and h.counit_vec(one) != h.field.one:
        rep.failed("bialgebra/counit-multiplicative", "counit is an algebra map",
                   "counit of 1 is not 1")
    elif ok:
        rep.passed("bialgebra/counit-multiplicative", "counit is an algebra map")

    ok = True
    for i in idx:
        l = {}
        r = {}
        for (a, b), c in h.comul_basis(i).items():
            vec_iadd(l, h.mul_vec(h.antipode_basis(a), h.basis_vec(b)), c)
            vec_iadd(r, h.mul_vec(h.basis_vec(a), h.antipode_basis(b)), c)
        expect = vec_scale(one, h.counit_basis(i))
        if l != expect or r != expect:
            fail("antipode/convolution", "antipode convolution laws", (i,),
                 h.fmt_vec(l), h.fmt_vec(r))
            ok = False
            break
    if ok:
        rep.passed("antipode/convolution", "antipode convolution laws")

    if h.cocommutative:
        ok = True
        for i in idx:
            t = h.comul_basis(i)
            sw = {(b, a): c for (a, b), c in t.items()}
            if t != sw:
                fail("coalgebra/cocommutativity", "coproduct is symmetric", (i,), t, sw)
                ok = False
                break
        if ok:
            rep.passed("coalgebra/cocommutativity", "coproduct is symmetric")
    else:
        rep.skipped("coalgebra/cocommutativity", "coproduct is symmetric", "not flagged cocommutative")
    return rep


def verify_morphism(f: HopfMorphism) -> Report:
    """Check that f intertwines product, unit, coproduct, counit and antipode."""
    if f.source.field != f.target.field:
        raise ValueError("source/target field mismatch")
    rep = Report()
    src, tgt = f.source, f.target
    d = src.dim

    ok = True
    for i in range(d):
        if not ok:
            break
        for j in range(d):
            lhs = f.apply(src.mul_basis(i, j))
            rhs = tgt.mul_vec(f.cols[i], f.cols[j])
            if lhs != rhs:
                rep.failed("morphism/multiplicative", "commutes with the product",
                           "at (%s, %s): lhs=%s rhs=%s" % (src.labels[i], src.labels[j],
                                                           tgt.fmt_vec(lhs), tgt.fmt_vec(rhs)))
                ok = False
                break
    if ok:
        rep.passed("morphism/multiplicative", "commutes with the product")

    if f.apply(src.unit_vec()) == tgt.unit_vec():
        rep.passed("morphism/unit", "preserves the unit")
    else:
        rep.failed("morphism/unit", "preserves the unit",
                   "f(1)=%s" % tgt.fmt_vec(f.apply(src.unit_vec())))

    ok = True
    for i in range(d):
        lhs = f.apply2(src.comul_basis(i))
        rhs = tgt.comul_vec(f.cols[i])
        if lhs != rhs:
            rep.failed("morphism/comultiplicative", "commutes with the coproduct",
                       "at %s" % src.labels[i])
            ok = False
            break
    if ok:
        rep.passed("morphism/comultiplicative", "commutes with the coproduct")

    ok = True
    for i in range(d):
        if tgt.counit_vec(f.cols[i]) != src.counit_basis(i):
            rep.failed("morphism/counit", "commutes with the counit", "at %s" % src.labels[i])
            ok = False
            break
    if ok:
        rep.passed("morphism/counit", "commutes with the counit")

    ok = True
    for i in range(d):
        lhs = f.apply(src.antipode_basis(i))
        rhs = tgt.antipode_vec(f.cols[i])
        if lhs != rhs:
            rep.failed("morphism/antipode", "commutes with the antipode",
                       "at %s: lhs=%s rhs=%s" % (src.labels[i], tgt.fmt_vec(lhs), tgt.fmt_vec(rhs)))
            ok = False
            break
    if ok:
        rep.passed("morphism/antipode", "commutes with the antipode")
    return rep


# ---------------------------------------------------------------------------
# categorical product

def tensor_hopf(a: HopfAlgebra, b: HopfAlgebra) -> HopfAlgebra:
    """Componentwise Hopf structure on the tensor basis; the categorical product."""
    if a.field != b.field:
        raise ValueError("field mismatch")
    if not (a.cocommutative and b.cocommutative):
        raise ValueError("categorical product requires cocommutative factors")
    db = b.dim
    labels = ["%s⊗%s" % (la, lb) for la in a.labels for lb in b.labels]

    def mul(i, j):
        ia, ib = divmod(i, db)
        ja, jb = divmod(j, db)
        out = {}
        va = a.mul_basis(ia, ja)
        vb = b.mul_basis(ib, jb)
        for x, cx in va.items():
            base = x * db
            for y, cy in vb.items():
                out[base + y] = cx * cy
        return out

    def comul(i):
        ia, ib = divmod(i, db)
        out = {}
        for (x1, x2), c1 in a.comul_basis(ia).items():
            for (y1, y2), c2 in b.comul_basis(ib).items():
                out[(x1 * db + y1, x2 * db + y2)] = c1 * c2
        return out

    def counit(i):
        ia, ib = divmod(i, db)
        return a.counit_basis(ia) * b.counit_basis(ib)

    def antipode(i):
        ia, ib = divmod(i, db)
        out = {}
        va = a.antipode_basis(ia)
        vb = b.antipode_basis(ib)
        for x, cx in va.items():
            base = x * db
            for y, cy in vb.items():
                out[base + y] = cx * cy
        return out

    unit = {}
    for x, cx in a.unit_vec().items():
        for y, cy in b.unit_vec().items():
            unit[x * db + y] = cx * cy
    return HopfAlgebra(a.field, labels, mul, comul, counit, antipode, unit)


def tensor_projection(t: HopfAlgebra, a: HopfAlgebra, b: HopfAlgebra, which: int) -> HopfMorphism:
    """Projection of a (x) b onto one factor, via the counit of the other."""
    db = b.dim
    cols = []
    for i in range(t.dim):
        ia, ib = divmod(i, db)
        if which == 0:
            cols.append(vec_scale(a.basis_vec(ia), b.counit_basis(ib)))
        else:
            cols.append(vec_scale(b.basis_vec(ib), a.counit_basis(ia)))
    return HopfMorphism(t, a if which == 0 else b, cols)


def tensor_power(h: HopfAlgebra, m: int) -> HopfAlgebra:
    """m-fold categorical power of h, basis indexed by digit tuples."""
    if m < 1:
        raise ValueError("power must be >= 1")
    out = h
    for _ in range(m - 1):
        out = tensor_hopf(out, h)
    return out


def power_projection(p: HopfAlgebra, h: HopfAlgebra, m: int, i: int) -> HopfMorphism:
    """Projection of the m-fold power onto slot i."""
    d = h.dim
    cols = []
    for idx in range(p.dim):
        digits = []
        rest = idx
        for _ in range(m):
            digits.append(rest % d)
            rest //= d
        digits.reverse()
        c = h.field.one
        for s, dig in enumerate(digits):
            if s != i:
                c = c * h.counit_basis(dig)
        cols.append(vec_scale(h.basis_vec(digits[i]), c))
    return HopfMorphism(p, h, cols)


# ---------------------------------------------------------------------------
# sub-Hopf machinery, kernels, equalizers

def assert_sub_hopf(h: HopfAlgebra, a: Subspace, context: str = "subspace") -> None:
    """Raise ClosureError unless a is closed under product, unit, coproduct, antipode."""
    if a.ambient != h.dim:
        raise ValueError("subspace ambient %d != algebra dim %d" % (a.ambient, h.dim))
    if not a.contains(h.unit_vec()):
        raise ClosureError("%s: unit not contained" % context)
    rows = a.rows
    for i, u in enumerate(rows):
        for v in rows:
            if not a.contains(h.mul_vec(u, v)):
                raise ClosureError("%s: not closed under the product" % context)
        if not a.contains(h.antipode_vec(u)):
            raise ClosureError("%s: not closed under the antipode" % context)
        if _coords2(h, a, h.comul_vec(u)) is None:
            raise ClosureError("%s: coproduct leaves the tensor square" % context)


def _coords2(h: HopfAlgebra, a: Subspace, t: dict):
    """Coordinates of a 2-tensor in the basis b_j (x) b_k of a subspace, or None."""
    piv = a.pivots
    coords = {}
    for j in range(a.dim):
        for k in range(a.dim):
            c = t.get((piv[j], piv[k]))
            if c is not None and c:
                coords[(j, k)] = c
    check = dict(t)
    for (j, k), c in coords.items():
        _tensor2_iadd(check, a.rows[j], a.rows[k], -c)
    if check:
        return None
    return coords


def sub_hopf(h: HopfAlgebra, a: Subspace, labels=None, context: str = "subspace"):
    """The Hopf algebra induced on a sub-Hopf subspace, with its inclusion."""
    assert_sub_hopf(h, a, context)
    n = a.dim
    if labels is None:
        labels = []
        one = h.field.one
        for row in a.rows:
            if len(row) == 1:
                (i, c), = row.items()
                labels.append(h.labels[i] if c == one else "%s*%s" % (h.field.to_str(c), h.labels[i]))
            else:
                labels.append("(" + "+".join(h.labels[i] for i in sorted(row)) + ")")
    rows = a.rows

    def mul(i, j):
        cs = a.coords(h.mul_vec(rows[i], rows[j]))
        return {k: c for k, c in enumerate(cs) if c}

    def comul(i):
        return _coords2(h, a, h.comul_vec(rows[i]))

    def counit(i):
        return h.counit_vec(rows[i])

    def antipode(i):
        cs = a.coords(h.antipode_vec(rows[i]))
        return {k: c for k, c in enumerate(cs) if c}

    unit_cs = a.coords(h.unit_vec())
    unit = {k: c for k, c in enumerate(unit_cs) if c}
    alg = HopfAlgebra(h.field, labels, mul, comul, counit, antipode, unit,
                      cocommutative=h.cocommutative)
    incl = HopfMorphism(alg, h, [dict(r) for r in rows])
    return alg, incl


def _hker_condition_cols(f: HopfMorphism):
    """Columns of x -> sum x' (x) f(x'') - x (x) 1 over the source basis."""
    src, tgt = f.source, f.target
    db = tgt.dim
    one_t = tgt.unit_vec()
    cols = []
    for i in range(src.dim):
        col = {}
        for (a, b), c in src.comul_basis(i).items():
            for j, x in f.cols[b].items():
                key = a * db + j
                s = col.get(key)
                t = c * x
                s = t if s is None else s + t
                if s:
                    col[key] = s
                else:
                    col.pop(key, None)
        for j, x in one_t.items():
            key = i * db + j
            s = col.get(key)
            s = -x if s is None else s - x
            if s:
                col[key] = s
            else:
                col.pop(key, None)
        cols.append(col)
    return cols


def hker_contains(f: HopfMorphism, v: Vec) -> bool:
    """Membership in HKer(f) by the defining condition sum v' (x) f(v'') = v (x) 1."""
    src, tgt = f.source, f.target
    db = tgt.dim
    lhs = {}
    for (a, b), c in src.comul_vec(v).items():
        for j, x in f.cols[b].items():
            key = a * db + j
            s = lhs.get(key)
            t = c * x
            s = t if s is None else s + t
            if s:
                lhs[key] = s
            else:
                lhs.pop(key, None)
    rhs = {}
    for a, c in v.items():
        for j, x in tgt.unit_vec().items():
            rhs[a * db + j] = c * x
    return lhs == rhs


def hopf_kernel(f: HopfMorphism, caps: Caps = DEFAULT_CAPS, check: bool = True) -> Subspace:
    """Hopf kernel of f: the x with sum x' (x) f(x'') = x (x) 1.

    The result is asserted to be a normal sub-Hopf algebra of the source.
    """
    src = f.source
    if src.dim > caps.kernel:
        raise CapExceeded("Hopf kernel at dim %d exceeds cap %d" % (src.dim, caps.kernel))
    cols = _hker_condition_cols(f)
    ker = kernel_from_cols(cols, src.dim, src.dim * f.target.dim, src.field)
    if check:
        assert_sub_hopf(src, ker, "Hopf kernel")
        if not is_normal(src, ker, check_sub=False):
            raise VerificationError("Hopf kernel is not normal (inconsistent input)")
    return ker


def equalizer(f: HopfMorphism, g: HopfMorphism, caps: Caps = DEFAULT_CAPS) -> Subspace:
    """Equalizer subspace of two parallel maps: x with sum x' (x) (f-g)(x'') = 0."""
    if f.source is not g.source or f.target is not g.target:
        raise ValueError("equalizer needs parallel morphisms")
    src, tgt = f.source, f.target
    if src.dim > caps.kernel:
        raise CapExceeded("equalizer at dim %d exceeds cap %d" % (src.dim, caps.kernel))
    db = tgt.dim
    cols = []
    for i in range(src.dim):
        col = {}
        for (a, b), c in src.comul_basis(i).items():
            diff = vec_sub(f.cols[b], g.cols[b])
            for j, x in diff.items():
                key = a * db + j
                s = col.get(key)
                t = c * x
                s = t if s is None else s + t
                if s:
                    col[key] = s
                else:
                    col.pop(key, None)
        cols.append(col)
    sub = kernel_from_cols(cols, src.dim, src.dim * db, src.field)
    assert_sub_hopf(src, sub, "equalizer")
    return sub


def is_normal(h: HopfAlgebra, a: Subspace, check_sub: bool = True) -> bool:
    """True iff the adjoint action of every basis vector maps a into itself."""
    if check_sub:
        assert_sub_hopf(h, a, "normality candidate")
    for i in range(h.dim):
        for row in a.rows:
            out = {}
            for j, y in row.items():
                vec_iadd(out, h.adjoint_basis(i, j), y)
            if not a.contains(out):
                return False
    return True


# ---------------------------------------------------------------------------
# group-likes and primitives

class GroupLikes:
    """Group-like vectors of an algebra, closed under product and antipode."""

    def __init__(self, vectors, table, identity, labels):
        self.vectors = vectors
        self.table = table
        self.identity = identity
        self.labels = labels

    def __len__(self):
        return len(self.vectors)


def _freeze(v: Vec):
    return tuple(sorted(v.items()))


def group_likes(h: HopfAlgebra, candidates=None) -> GroupLikes:
    """Filter candidate vectors (default: the basis) down to the group of group-likes.

    Survivors must be closed under product and antipode; otherwise the
    candidate set is inconsistent and a ClosureError is raised.
    """
    if candidates is None:
        candidates = [h.basis_vec(i) for i in range(h.dim)]
    survivors = []
    labels = []
    for n, v in enumerate(candidates):
        t = {}
        _tensor2_iadd(t, v, v)
        if h.comul_vec(v) == t and h.counit_vec(v) == h.field.one:
            survivors.append(v)
            if len(v) == 1 and next(iter(v.values())) == h.field.one:
                labels.append(h.labels[next(iter(v))])
            else:
                labels.append("g%d" % n)
    index = {_freeze(v): i for i, v in enumerate(survivors)}
    if _freeze(h.unit_vec()) not in index:
        raise ClosureError("group-like candidates do not contain the unit")
    table = []
    for u in survivors:
        row = []
        for v in survivors:
            p = index.get(_freeze(h.mul_vec(u, v)))
            if p is None:
                raise ClosureError("group-like candidates are not closed under the product")
            row.append(p)
        table.append(row)
    for u in survivors:
        if _freeze(h.antipode_vec(u)) not in index:
            raise ClosureError("group-like candidates are not closed under the antipode")
    return GroupLikes(survivors, table, index[_freeze(h.unit_vec())], labels)


class Primitives:
    """Primitive subspace with the commutator bracket in subspace coordinates."""

    def __init__(self, subspace: Subspace, bracket: Trilinear):
        self.subspace = subspace
        self.bracket = bracket

    @property
    def dim(self):
        return self.subspace.dim


def primitives(h: HopfAlgebra) -> Primitives:
    """Solve the linear condition for primitives and restrict the commutator."""
    d = h.dim
    cols = []
    one = h.unit_vec()
    for i in range(d):
        col = {}
        for (a, b), c in h.comul_basis(i).items():
            key = a * d + b
            s = col.get(key)
            s = c if s is None else s + c
            if s:
                col[key] = s
            else:
                col.pop(key, None)
        # subtract x (x) 1 and 1 (x) x; overlapping keys accumulate
        for j, x in one.items():
            for key in (i * d + j, j * d + i):
                s = col.get(key)
                s = -x if s is None else s - x
                if s:
                    col[key] = s
                else:
                    col.pop(key, None)
        cols.append(col)
    sub = kernel_from_cols(cols, d, d * d, h.field)
    n = sub.dim
    z = h.field.zero
    coeffs = [z] * (n * n * n)
    for i, u in enumerate(sub.rows):
        for j, v in enumerate(sub.rows):
            br = vec_sub(h.mul_vec(u, v), h.mul_vec(v, u))
            cs = sub.coords(br)
            if cs is None:
                raise ClosureError("commutator bracket leaves the primitive subspace")
            base = (i * n + j) * n
            for k, c in enumerate(cs):
                coeffs[base + k] = c
    return Primitives(sub, Trilinear((n, n, n), coeffs))
