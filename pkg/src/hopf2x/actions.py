"""Module-bialgebra actions, smash products, split-extension decomposition."""

from __future__ import annotations

from .config import Caps, DEFAULT_CAPS
from .hopf import (HopfAlgebra, HopfMorphism, hopf_kernel, sub_hopf,
                   verify_morphism, _tensor2_iadd)
from .linalg import Trilinear, Vec, vec_iadd, vec_scale
from .report import Report, VerificationError


class NotAPoint(VerificationError):
    """The candidate (projection, section) pair does not split."""


class ActionTensor:
    """Bilinear action acting (x) carrier -> carrier, evaluated per basis pair."""

    __slots__ = ("acting", "carrier", "_impl", "_memo")

    def __init__(self, acting: HopfAlgebra, carrier: HopfAlgebra, impl):
        self.acting = acting
        self.carrier = carrier
        self._impl = impl
        self._memo = {}

    def act_basis(self, i: int, j: int) -> Vec:
        key = (i, j)
        v = self._memo.get(key)
        if v is None:
            v = self._impl(i, j)
            self._memo[key] = v
        return v

    def act_vec(self, u: Vec, v: Vec) -> Vec:
        out = {}
        for i, x in u.items():
            for j, y in v.items():
                vec_iadd(out, self.act_basis(i, j), x * y)
        return out

    def to_trilinear(self) -> Trilinear:
        a, b = self.acting.dim, self.carrier.dim
        z = self.acting.field.zero
        coeffs = [z] * (a * b * b)
        for i in range(a):
            for j in range(b):
                base = (i * b + j) * b
                for k, c in self.act_basis(i, j).items():
                    coeffs[base + k] = c
        return Trilinear((a, b, b), coeffs)

    @classmethod
    def from_trilinear(cls, acting: HopfAlgebra, carrier: HopfAlgebra, t: Trilinear) -> "ActionTensor":
        if t.dims != (acting.dim, carrier.dim, carrier.dim):
            raise ValueError("action tensor dims mismatch")
        return cls(acting, carrier, t.pair)

    def __repr__(self):
        return "ActionTensor(%d on %d)" % (self.acting.dim, self.carrier.dim)


def trivial_action(acting: HopfAlgebra, carrier: HopfAlgebra) -> ActionTensor:
    """x acts as counit(x) * id."""
    return ActionTensor(acting, carrier,
                        lambda i, j: vec_scale(carrier.basis_vec(j), acting.counit_basis(i)))


def regular_action(h: HopfAlgebra) -> ActionTensor:
    """x acts on y by left multiplication; a module coalgebra, not a module algebra."""
    return ActionTensor(h, h, h.mul_basis)


def adjoint_action(h: HopfAlgebra) -> ActionTensor:
    """x (x) y -> sum x' y S(x''); needs cocommutativity to be a module coalgebra."""
    if not h.cocommutative:
        raise VerificationError("adjoint action needs a cocommutative algebra")
    return ActionTensor(h, h, h.adjoint_basis)


def verify_module_bialgebra(act: ActionTensor) -> Report:
    """Check the module, module-algebra and module-coalgebra laws on basis tuples."""
    rep = Report()
    H, I = act.acting, act.carrier
    one_h = H.unit_vec()
    one_i = I.unit_vec()

    ok = True
    for v in range(I.dim):
        if act.act_vec(one_h, I.basis_vec(v)) != I.basis_vec(v):
            rep.failed("action/unit", "unit acts as identity", "at %s" % I.labels[v])
            ok = False
            break
    if ok:
        rep.passed("action/unit", "unit acts as identity")

    ok = True
    for x in range(H.dim):
        if not ok:
            break
        for y in range(H.dim):
            if not ok:
                break
            for v in range(I.dim):
                lhs = act.act_vec(H.mul_basis(x, y), I.basis_vec(v))
                rhs = act.act_vec(H.basis_vec(x), act.act_basis(y, v))
                if lhs != rhs:
                    rep.failed("action/multiplicative", "action of a product",
                               "at (%s, %s, %s)" % (H.labels[x], H.labels[y], I.labels[v]))
                    ok = False
                    break
    if ok:
        rep.passed("action/multiplicative", "action of a product")

    ok = True
    for x in range(H.dim):
        lhs = act.act_vec(H.basis_vec(x), one_i)
        rhs = vec_scale(one_i, H.counit_basis(x))
        if lhs != rhs:
            rep.failed("module-algebra/unit", "action on the unit",
                       "at %s: lhs=%s" % (H.labels[x], I.fmt_vec(lhs)))
            ok = False
            break
    if ok:
        rep.passed("module-algebra/unit", "action on the unit")

    ok = True
    for x in range(H.dim):
        if not ok:
            break
        for u in range(I.dim):
            if not ok:
                break
            for v in range(I.dim):
                lhs = act.act_vec(H.basis_vec(x), I.mul_basis(u, v))
                rhs = {}
                for (x1, x2), c in H.comul_basis(x).items():
                    vec_iadd(rhs, I.mul_vec(act.act_basis(x1, u), act.act_basis(x2, v)), c)
                if lhs != rhs:
                    rep.failed("module-algebra/product", "action on a product",
                               "at (%s, %s, %s)" % (H.labels[x], I.labels[u], I.labels[v]))
                    ok = False
                    break
    if ok:
        rep.passed("module-algebra/product", "action on a product")

    ok = True
    for x in range(H.dim):
        if not ok:
            break
        for v in range(I.dim):
            lhs = I.comul_vec(act.act_basis(x, v))
            rhs = {}
            for (x1, x2), cx in H.comul_basis(x).items():
                for (v1, v2), cv in I.comul_basis(v).items():
                    _tensor2_iadd(rhs, act.act_basis(x1, v1), act.act_basis(x2, v2), cx * cv)
            if lhs != rhs:
                rep.failed("module-coalgebra/coproduct", "coproduct of an action value",
                           "at (%s, %s)" % (H.labels[x], I.labels[v]))
                ok = False
                break
    if ok:
        rep.passed("module-coalgebra/coproduct", "coproduct of an action value")

    ok = True
    for x in range(H.dim):
        if not ok:
            break
        for v in range(I.dim):
            if I.counit_vec(act.act_basis(x, v)) != H.counit_basis(x) * I.counit_basis(v):
                rep.failed("module-coalgebra/counit", "counit of an action value",
                           "at (%s, %s)" % (H.labels[x], I.labels[v]))
                ok = False
                break
    if ok:
        rep.passed("module-coalgebra/counit", "counit of an action value")
    return rep


# ---------------------------------------------------------------------------
# smash products

def smash_pair_vec(smash: HopfAlgebra, u: Vec, x: Vec) -> Vec:
    """Embed u (x) x into the smash coordinates."""
    carrier, acting, _ = smash.factors
    dh = acting.dim
    out = {}
    for i, a in u.items():
        base = i * dh
        for j, b in x.items():
            out[base + j] = a * b
    return out


def smash_product(act: ActionTensor, check: bool = False) -> HopfAlgebra:
    """The twisted product on carrier (x) acting; structure maps evaluate lazily.

    With ``check=True`` the module-bialgebra laws of the action are verified
    first (the construction is only a Hopf algebra in that case).
    """
    I, H = act.carrier, act.acting
    if I.field != H.field:
        raise ValueError("field mismatch")
    if not (I.cocommutative and H.cocommutative):
        raise VerificationError("smash product requires cocommutative factors")
    if check:
        verify_module_bialgebra(act).require("smash product action")
    dh = H.dim
    labels = ["%s⊗%s" % (li, lh) for li in I.labels for lh in H.labels]

    def mul(i, j):
        u, x = divmod(i, dh)
        v, y = divmod(j, dh)
        out = {}
        eu = I.basis_vec(u)
        for (x1, x2), c in H.comul_basis(x).items():
            left = I.mul_vec(eu, act.act_basis(x1, v))
            right = H.mul_basis(x2, y)
            for a, ca in left.items():
                base = a * dh
                cca = c * ca
                for b, cb in right.items():
                    key = base + b
                    s = out.get(key)
                    t = cca * cb
                    s = t if s is None else s + t
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return out

    def comul(i):
        u, x = divmod(i, dh)
        out = {}
        for (u1, u2), cu in I.comul_basis(u).items():
            for (x1, x2), cx in H.comul_basis(x).items():
                out[(u1 * dh + x1, u2 * dh + x2)] = cu * cx
        return out

    def counit(i):
        u, x = divmod(i, dh)
        return I.counit_basis(u) * H.counit_basis(x)

    def mul_vec_local(a: Vec, b: Vec) -> Vec:
        out = {}
        for i, x in a.items():
            for j, y in b.items():
                vec_iadd(out, smash.mul_basis(i, j), x * y)
        return out

    def antipode(i):
        u, x = divmod(i, dh)
        left = {}
        for j, b in H.antipode_basis(x).items():
            for a, ca in I.unit_vec().items():
                left[a * dh + j] = ca * b
        right = {}
        for a, ca in I.antipode_basis(u).items():
            base = a * dh
            for j, b in H.unit_vec().items():
                right[base + j] = ca * b
        return mul_vec_local(left, right)

    unit = {}
    for a, ca in I.unit_vec().items():
        for j, b in H.unit_vec().items():
            unit[a * dh + j] = ca * b

    smash = HopfAlgebra(I.field, labels, mul, comul, counit, antipode, unit,
                        cocommutative=True, factors=(I, H, act))
    return smash


# ---------------------------------------------------------------------------
# split extensions

class RadfordSplit:
    """Witness of the split-extension decomposition of a point."""

    def __init__(self, kernel, kernel_algebra, inclusion, action, smash, psi, phi):
        self.kernel = kernel
        self.kernel_algebra = kernel_algebra
        self.inclusion = inclusion
        self.action = action
        self.smash = smash
        self.psi = psi
        self.phi = phi


def radford_decompose(proj: HopfMorphism, sect: HopfMorphism,
                      caps: Caps = DEFAULT_CAPS, check: bool = True) -> RadfordSplit:
    """Decompose the source of a split epi as (Hopf kernel) smash (target).

    ``proj . sect`` must be the identity; the inverse pair Psi/Phi is
    verified to compose to the identity exactly, and Psi is checked to be a
    Hopf algebra map onto the smash product.
    """
    if proj.source is not sect.target or proj.target is not sect.source:
        raise ValueError("projection and section do not match")
    I, H = proj.source, proj.target
    comp = proj.compose(sect)
    if not comp.is_identity():
        raise NotAPoint("projection composed with section is not the identity")

    ker = hopf_kernel(proj, caps)
    k_alg, incl = sub_hopf(I, ker, context="Hopf kernel of the projection")

    def act_impl(i, j):
        w = I.adjoint_vec(sect.cols[i], incl.cols[j])
        cs = ker.coords(w)
        if cs is None:
            raise VerificationError("adjoint action leaves the Hopf kernel")
        return {k: c for k, c in enumerate(cs) if c}

    action = ActionTensor(H, k_alg, act_impl)
    smash = smash_product(action, check=check)
    dh = H.dim

    # f(x) = sum x' sect(proj(S(x'')))
    f_cols = []
    for i in range(I.dim):
        out = {}
        for (a, b), c in I.comul_basis(i).items():
            w = sect.apply(proj.apply(I.antipode_basis(b)))
            vec_iadd(out, I.mul_vec(I.basis_vec(a), w), c)
        f_cols.append(out)

    psi_cols = []
    for i in range(I.dim):
        out = {}
        for (a, b), c in I.comul_basis(i).items():
            cs = ker.coords(f_cols[a])
            if cs is None:
                raise VerificationError("kernel generator map leaves the Hopf kernel")
            kvec = {k: v for k, v in enumerate(cs) if v}
            hvec = proj.cols[b]
            for k, kv in kvec.items():
                base = k * dh
                for hh, hv in hvec.items():
                    key = base + hh
                    s = out.get(key)
                    t = c * kv * hv
                    s = t if s is None else s + t
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        psi_cols.append(out)
    psi = HopfMorphism(I, smash, psi_cols)

    phi_cols = []
    for idx in range(smash.dim):
        k, x = divmod(idx, dh)
        phi_cols.append(I.mul_vec(incl.cols[k], sect.cols[x]))
    phi = HopfMorphism(smash, I, phi_cols)

    if check:
        if not psi.compose(phi).is_identity():
            raise VerificationError("Psi . Phi is not the identity")
        if not phi.compose(psi).is_identity():
            raise VerificationError("Phi . Psi is not the identity")
        verify_morphism(psi).require("Psi as a Hopf algebra map")
    return RadfordSplit(ker, k_alg, incl, action, smash, psi, phi)
