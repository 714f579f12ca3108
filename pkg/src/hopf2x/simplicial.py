"""Truncated simplicial Hopf algebras: identities, Moore complexes, decomposition.

The Moore complex has two computation paths.  Kernel mode intersects Hopf
kernels of the faces (quadratic in the level dimension, capped); projection
mode takes the image of the composite of kernel generator maps, which only
ever works with square matrices and scales to the large smash-product
levels.  Both must agree wherever both run.
"""

from __future__ import annotations

from .config import Caps, DEFAULT_CAPS
from .fields import Field
from .hopf import (HopfAlgebra, HopfMorphism, hker_contains, hopf_kernel,
                   is_normal, power_projection, sub_hopf, tensor_power,
                   verify_morphism, equalizer)
from .linalg import Subspace, Vec, image_from_cols, intersect, vec_iadd, vec_scale
from .report import CapExceeded, Report, VerificationError


class TruncatedSimplicialHopf:
    """Levels H_0..H_n with faces d_i: H_k -> H_{k-1} and degeneracies s_j: H_k -> H_{k+1}."""

    def __init__(self, levels, faces, degeneracies):
        self.levels = list(levels)
        self.truncation = len(self.levels) - 1
        self.faces = [list(fs) for fs in faces]            # faces[k-1] = [d_0..d_k] at level k
        self.degeneracies = [list(ds) for ds in degeneracies]  # degeneracies[k] = [s_0..s_k]
        if len(self.faces) != self.truncation:
            raise ValueError("need face lists for levels 1..%d" % self.truncation)
        if len(self.degeneracies) != self.truncation:
            raise ValueError("need degeneracy lists for levels 0..%d" % (self.truncation - 1))
        for k in range(1, self.truncation + 1):
            if len(self.faces[k - 1]) != k + 1:
                raise ValueError("level %d needs %d faces" % (k, k + 1))
        for k in range(self.truncation):
            if len(self.degeneracies[k]) != k + 1:
                raise ValueError("level %d needs %d degeneracies" % (k, k + 1))

    def face(self, k: int, i: int) -> HopfMorphism:
        return self.faces[k - 1][i]

    def degeneracy(self, k: int, j: int) -> HopfMorphism:
        return self.degeneracies[k][j]

    def level(self, k: int) -> HopfAlgebra:
        return self.levels[k]

    def __repr__(self):
        return "TruncatedSimplicialHopf(dims %s)" % [h.dim for h in self.levels]


def _morphisms_equal(f: HopfMorphism, g: HopfMorphism) -> bool:
    return f.cols == g.cols


def verify_simplicial(t: TruncatedSimplicialHopf, morphisms: bool = True) -> Report:
    """All five simplicial identity families, as exact equalities on basis vectors.

    With ``morphisms=True`` every face and degeneracy is first checked to be
    a Hopf algebra map (the dominant cost on large levels).
    """
    rep = Report()
    n = t.truncation

    if morphisms:
        ok = True
        wit = ""
        for k in range(1, n + 1):
            for i, f in enumerate(t.faces[k - 1]):
                r = verify_morphism(f)
                if not r.ok:
                    ok = False
                    wit = "d_%d at level %d: %s" % (i, k, r.first_failure().witness)
        rep.record("simplicial/face-morphisms", "faces are Hopf algebra maps", ok, wit)
        ok = True
        wit = ""
        for k in range(n):
            for j, s in enumerate(t.degeneracies[k]):
                r = verify_morphism(s)
                if not r.ok:
                    ok = False
                    wit = "s_%d at level %d: %s" % (j, k, r.first_failure().witness)
        rep.record("simplicial/degeneracy-morphisms", "degeneracies are Hopf algebra maps", ok, wit)

    ok = True
    wit = ""
    for k in range(2, n + 1):
        for j in range(k + 1):
            for i in range(j):
                lhs = t.face(k - 1, i).compose(t.face(k, j))
                rhs = t.face(k - 1, j - 1).compose(t.face(k, i))
                if not _morphisms_equal(lhs, rhs):
                    ok = False
                    wit = "d_%d d_%d != d_%d d_%d at level %d" % (i, j, j - 1, i, k)
    rep.record("simplicial/dd", "face-face identities", ok, wit)

    ok = True
    wit = ""
    for k in range(n - 1):
        for j in range(k + 1):
            for i in range(j + 1):
                lhs = t.degeneracy(k + 1, i).compose(t.degeneracy(k, j))
                rhs = t.degeneracy(k + 1, j + 1).compose(t.degeneracy(k, i))
                if not _morphisms_equal(lhs, rhs):
                    ok = False
                    wit = "s_%d s_%d != s_%d s_%d at level %d" % (i, j, j + 1, i, k)
    rep.record("simplicial/ss", "degeneracy-degeneracy identities", ok, wit)

    ok = True
    wit = ""
    for k in range(n):
        for j in range(k + 1):
            s = t.degeneracy(k, j)
            for i in range(k + 2):
                comp = t.face(k + 1, i).compose(s)
                if i == j or i == j + 1:
                    good = comp.is_identity()
                elif i < j:
                    good = _morphisms_equal(comp, t.degeneracy(k - 1, j - 1).compose(t.face(k, i)))
                else:
                    good = _morphisms_equal(comp, t.degeneracy(k - 1, j).compose(t.face(k, i - 1)))
                if not good:
                    ok = False
                    wit = "d_%d s_%d at level %d" % (i, j, k)
    rep.record("simplicial/ds", "face-degeneracy identities", ok, wit)
    return rep


# ---------------------------------------------------------------------------
# kernel generator maps and Moore complexes

def generator_map_cols(t: TruncatedSimplicialHopf, k: int, i: int):
    """Columns of x -> sum x' s_i d_i(S(x'')) on H_k."""
    if not (0 <= i <= k - 1):
        raise ValueError("generator map index %d out of range at level %d" % (i, k))
    h = t.level(k)
    d = t.face(k, i)
    s = t.degeneracy(k - 1, i)
    cols = []
    for b in range(h.dim):
        out = {}
        for (a, c), w in h.comul_basis(b).items():
            v = s.apply(d.apply(h.antipode_basis(c)))
            vec_iadd(out, h.mul_vec(h.basis_vec(a), v), w)
        cols.append(out)
    return cols


def _apply_cols(cols, v: Vec) -> Vec:
    out = {}
    for j, x in v.items():
        vec_iadd(out, cols[j], x)
    return out


class MooreComplex:
    """Moore terms NH_k as canonical subspaces with restricted boundary maps."""

    def __init__(self, t: TruncatedSimplicialHopf, terms, mode: str):
        self.simplicial = t
        self.terms = list(terms)
        self.mode = mode
        self._algebras = {}
        self._inclusions = {}
        self._boundaries = {}

    def dim(self, k: int) -> int:
        return self.terms[k].dim

    def dims(self):
        return [s.dim for s in self.terms]

    def term_algebra(self, k: int):
        """Sub-Hopf algebra structure on NH_k (NH_0 is H_0 itself)."""
        if k == 0:
            return self.simplicial.level(0), HopfMorphism.identity(self.simplicial.level(0))
        if k not in self._algebras:
            alg, incl = sub_hopf(self.simplicial.level(k), self.terms[k],
                                 context="Moore term %d" % k)
            self._algebras[k] = alg
            self._inclusions[k] = incl
        return self._algebras[k], self._inclusions[k]

    def boundary(self, k: int) -> HopfMorphism:
        """Restriction of d_k to NH_k, landing in NH_{k-1} coordinates."""
        if k not in self._boundaries:
            alg_k, _ = self.term_algebra(k)
            alg_km1, _ = self.term_algebra(k - 1)
            d = self.simplicial.face(k, k)
            cols = []
            for row in self.terms[k].rows:
                w = d.apply(row)
                if k - 1 == 0:
                    cols.append(w)
                    continue
                cs = self.terms[k - 1].coords(w)
                if cs is None:
                    raise VerificationError("boundary image leaves NH_%d" % (k - 1))
                cols.append({j: c for j, c in enumerate(cs) if c})
            self._boundaries[k] = HopfMorphism(alg_k, alg_km1, cols)
        return self._boundaries[k]


def moore_complex(t: TruncatedSimplicialHopf, mode: str = "auto",
                  caps: Caps = DEFAULT_CAPS) -> MooreComplex:
    """Compute NH_0..NH_n in kernel or projection mode (or both, cross-checked).

    Kernel mode refuses levels above the kernel cap; ``auto`` picks kernel
    mode per level where feasible and projection mode above the cap.
    """
    if mode not in ("kernel", "projection", "both", "auto"):
        raise ValueError("unknown Moore mode %r" % mode)
    n = t.truncation
    field = t.level(0).field
    terms = [Subspace.full(t.level(0).dim, field)]
    for k in range(1, n + 1):
        h = t.level(k)
        kernel_ok = h.dim <= caps.kernel
        want_kernel = mode in ("kernel", "both") or (mode == "auto" and kernel_ok)
        want_proj = mode in ("projection", "both") or (mode == "auto" and not kernel_ok)
        ker_space = proj_space = None
        if want_kernel:
            if not kernel_ok:
                raise CapExceeded("kernel-mode Moore term at dim %d exceeds cap %d"
                                  % (h.dim, caps.kernel))
            ker_space = hopf_kernel(t.face(k, 0), caps, check=False)
            for i in range(1, k):
                ker_space = intersect(ker_space, hopf_kernel(t.face(k, i), caps, check=False))
        if want_proj:
            comp = None
            for i in range(k):
                cols = generator_map_cols(t, k, i)
                if comp is None:
                    comp = cols
                else:
                    comp = [_apply_cols(cols, c) for c in comp]
            proj_space = image_from_cols(comp, h.dim, field)
        if ker_space is not None and proj_space is not None and ker_space != proj_space:
            raise VerificationError("kernel and projection Moore terms disagree at level %d" % k)
        terms.append(ker_space if ker_space is not None else proj_space)
    return MooreComplex(t, terms, mode)


def verify_normal_chain(m: MooreComplex) -> Report:
    """Boundaries compose to the zero morphism and have normal images."""
    rep = Report()
    t = m.simplicial
    n = t.truncation

    ok = True
    wit = ""
    for k in range(1, n):
        upper = m.boundary(k + 1)
        lower = m.boundary(k)
        alg_up, _ = m.term_algebra(k + 1)
        alg_low, _ = m.term_algebra(k - 1)
        for i in range(alg_up.dim):
            got = lower.apply(upper.cols[i])
            want = vec_scale(alg_low.unit_vec(), alg_up.counit_basis(i))
            if got != want:
                ok = False
                wit = "at level %d basis %d" % (k + 1, i)
    rep.record("moore/chain-zero", "composite boundary is the zero morphism", ok, wit)

    ok = True
    wit = ""
    for k in range(1, n + 1):
        alg_low, _ = m.term_algebra(k - 1)
        bnd = m.boundary(k)
        img = image_from_cols(bnd.cols, alg_low.dim, alg_low.field)
        if not is_normal(alg_low, img):
            ok = False
            wit = "image of the boundary at level %d" % k
    rep.record("moore/normal-images", "boundary images are normal sub-Hopf algebras", ok, wit)
    return rep


def moore_length_at_most(t: TruncatedSimplicialHopf, length: int,
                         mode: str = "auto", caps: Caps = DEFAULT_CAPS,
                         moore: MooreComplex | None = None) -> bool:
    """True iff every Moore term above the given length is the zero object."""
    m = moore if moore is not None else moore_complex(t, mode, caps)
    return all(m.dim(i) == 1 for i in range(length + 1, t.truncation + 1))


# ---------------------------------------------------------------------------
# level decomposition along split-extension points

def _restrict_to_kernel(t: TruncatedSimplicialHopf, caps: Caps):
    """Restrict levels 1..n to HKer(d_0), shifting faces/degeneracies down by one."""
    n = t.truncation
    levels = []
    spaces = []
    for k in range(1, n + 1):
        ker = hopf_kernel(t.face(k, 0), caps, check=False)
        alg, _ = sub_hopf(t.level(k), ker, context="HKer(d_0) at level %d" % k)
        spaces.append(ker)
        levels.append(alg)

    def restrict(f: HopfMorphism, src_idx: int, tgt_idx: int) -> HopfMorphism:
        src_space, tgt_space = spaces[src_idx], spaces[tgt_idx]
        cols = []
        for row in src_space.rows:
            w = f.apply(row)
            cs = tgt_space.coords(w)
            if cs is None:
                raise VerificationError("restricted map leaves HKer(d_0)")
            cols.append({j: c for j, c in enumerate(cs) if c})
        return HopfMorphism(levels[src_idx], levels[tgt_idx], cols)

    faces = []
    for k in range(2, n + 1):
        faces.append([restrict(t.face(k, i), k - 1, k - 2) for i in range(1, k + 1)])
    degs = []
    for k in range(1, n):
        degs.append([restrict(t.degeneracy(k, j), k - 1, k) for j in range(1, k + 1)])
    return TruncatedSimplicialHopf(levels, faces, degs)


def _lower_truncation(t: TruncatedSimplicialHopf, n: int) -> TruncatedSimplicialHopf:
    return TruncatedSimplicialHopf(t.levels[:n + 1], t.faces[:n], t.degeneracies[:n])


def _decompose_dims(t: TruncatedSimplicialHopf, k: int, caps: Caps, factors: list) -> None:
    """Iterate the (d_0, s_0) split of the top level, collecting kernel dimensions."""
    from .actions import radford_decompose

    if k == 0:
        factors.append(t.level(0).dim)
        return
    split = radford_decompose(t.face(k, 0), t.degeneracy(k - 1, 0), caps)
    if k == 1:
        factors.append(split.kernel.dim)
        factors.append(t.level(0).dim)
        return
    restricted = _restrict_to_kernel(_lower_truncation(t, k), caps)
    _decompose_dims(restricted, k - 1, caps, factors)
    _decompose_dims(_lower_truncation(t, k - 1), k - 1, caps, factors)


def decomposition_check(t: TruncatedSimplicialHopf, k: int,
                        caps: Caps = DEFAULT_CAPS,
                        moore: MooreComplex | None = None) -> Report:
    """Check dim H_k against the Moore-term product formula and build the
    iterated split-extension isomorphism explicitly."""
    rep = Report()
    if k > t.truncation:
        raise ValueError("level %d beyond truncation %d" % (k, t.truncation))
    m = moore if moore is not None else moore_complex(t, "auto", caps)

    from math import comb
    expected = 1
    for l in range(k + 1):
        expected *= m.dim(k - l) ** comb(k, l)
    rep.record("decomposition/dimension", "level dimension is the product of Moore terms",
               expected == t.level(k).dim,
               "expected %d, level has %d" % (expected, t.level(k).dim))

    try:
        factors = []
        _decompose_dims(_lower_truncation(t, k), k, caps, factors)
        prod = 1
        for f in factors:
            prod *= f
        rep.record("decomposition/iterated-splits", "iterated split extensions are bijective",
                   prod == t.level(k).dim, "factor dims %r" % (factors,))
    except (VerificationError, CapExceeded) as exc:
        rep.failed("decomposition/iterated-splits", "iterated split extensions are bijective",
                   str(exc))
    return rep


# ---------------------------------------------------------------------------
# one simplicial-kernel step of the coskeleton

def simplicial_kernel_step(t: TruncatedSimplicialHopf,
                           caps: Caps = DEFAULT_CAPS) -> TruncatedSimplicialHopf:
    """Extend an n-truncation by its simplicial kernel at level n+1.

    The new level is the intersection of the equalizers of d_i p_j and
    d_{j-1} p_i inside the (n+2)-fold power of H_n; faces are the restricted
    projections, degeneracies the product-tuplings forced by the simplicial
    identities.
    """
    n = t.truncation
    h = t.level(n)
    m = n + 2
    if h.dim ** m > caps.materialize:
        raise CapExceeded("simplicial kernel power dim %d exceeds cap %d"
                          % (h.dim ** m, caps.materialize))
    power = tensor_power(h, m)
    projections = [power_projection(power, h, m, i) for i in range(m)]

    space = Subspace.full(power.dim, h.field)
    if n >= 1:
        for j in range(1, m):
            for i in range(j):
                f = t.face(n, i).compose(projections[j])
                g = t.face(n, j - 1).compose(projections[i])
                space = intersect(space, equalizer(f, g, Caps(kernel=power.dim,
                                                              materialize=caps.materialize)))
    alg, incl = sub_hopf(power, space, context="simplicial kernel")

    faces = []
    for i in range(m):
        cols = [projections[i].apply(row) for row in space.rows]
        faces.append(HopfMorphism(alg, h, cols))

    degs = []
    for j in range(n + 1):
        comps = []
        for i in range(m):
            if i == j or i == j + 1:
                comps.append(HopfMorphism.identity(h))
            elif i < j:
                comps.append(t.degeneracy(n - 1, j - 1).compose(t.face(n, i)))
            else:
                comps.append(t.degeneracy(n - 1, j).compose(t.face(n, i - 1)))
        cols = []
        for b in range(h.dim):
            out = {}
            for legs, c in h.legs_basis(b, m).items():
                # tensor the component images across the m slots, slot 0 most significant
                pieces = [comps[i].apply(h.basis_vec(legs[i])) for i in range(m)]
                vec = None
                stride = 1
                for piece in reversed(pieces):
                    if vec is None:
                        vec = piece
                        stride = h.dim
                        continue
                    new = {}
                    for a, ca in piece.items():
                        base = a * stride
                        for r, cr in vec.items():
                            new[base + r] = ca * cr
                    vec = new
                    stride *= h.dim
                vec_iadd(out, vec, c)
            cs = space.coords(out)
            if cs is None:
                raise VerificationError("degeneracy image leaves the simplicial kernel")
            cols.append({r: c for r, c in enumerate(cs) if c})
        degs.append(HopfMorphism(h, alg, cols))

    levels = list(t.levels) + [alg]
    faces_all = [list(fs) for fs in t.faces] + [faces]
    degs_all = [list(ds) for ds in t.degeneracies] + [degs]
    return TruncatedSimplicialHopf(levels, faces_all, degs_all)


def constant_simplicial(h: HopfAlgebra, truncation: int) -> TruncatedSimplicialHopf:
    """The constant simplicial object: every level h, all maps the identity."""
    ident = HopfMorphism.identity(h)
    levels = [h] * (truncation + 1)
    faces = [[ident] * (k + 1) for k in range(1, truncation + 1)]
    degs = [[ident] * (k + 1) for k in range(truncation)]
    return TruncatedSimplicialHopf(levels, faces, degs)
