"""Crossed modules over an operator group Γ.

A crossed module is a Γ-equivariant homomorphism ``boundary: F -> G`` with a
left action of G on F (``gact[g]`` is a permutation of F) such that

* CM1: boundary(g·f) = g boundary(f) g^-1
* CM2: boundary(f)·f' = f f' f^-1
* Γ-compatibility: σ(g·f) = σ(g)·σ(f)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ._memo import memoize
from .errors import NotCentrable, NotQuasiAbelian
from .grp import (
    GammaGroup,
    GammaHom,
    GroupHom,
    center,
    centralizer,
    compose_perms,
    is_automorphism,
    is_normal,
    quotient,
    sub_gamma,
)


@dataclass(frozen=True, eq=False)
class CrossedModule:
    F: GammaGroup
    G: GammaGroup
    boundary: GroupHom
    gact: tuple
    name: str = ""

    @property
    def gamma(self):
        return self.F.gamma

    def d(self, f):
        return self.boundary.map[f]

    def act(self, g, f):
        return self.gact[g][f]

    @cached_property
    def kernel(self):
        return self.boundary.kernel

    @cached_property
    def image(self):
        return self.boundary.image

    @property
    def is_injective(self):
        return len(self.kernel) == 1

    @property
    def is_surjective(self):
        return len(self.image) == self.G.group.order

    def __repr__(self):
        return f"<CrossedModule {self.name or '?'} |F|={self.F.group.order} |G|={self.G.group.order} |Γ|={self.gamma.order}>"


@dataclass
class Violation:
    identity: str
    witness: tuple

    def __str__(self):
        return f"{self.identity} violated at {self.witness}"


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)
    kernel_central: bool = False
    image_normal: bool = False

    @property
    def ok(self):
        return not self.violations

    def __bool__(self):
        return self.ok


def validate(cm):
    """Exhaustively check the crossed-module identities; never raises on failure."""
    rep = ValidationReport()
    F, G, Gam = cm.F.group, cm.G.group, cm.gamma
    v = rep.violations
    if cm.G.gamma.order != Gam.order or cm.G.gamma.table != Gam.table:
        v.append(Violation("SAME_GAMMA", ()))
        return rep
    for name, GG in (("GAMMA_ACTION_F", cm.F), ("GAMMA_ACTION_G", cm.G)):
        try:
            GG.validate()
        except ValueError as exc:
            v.append(Violation(name, (str(exc),)))
    d = cm.boundary.map
    if len(d) != F.order or d[0] != 0:
        v.append(Violation("BOUNDARY_HOM", (0,)))
        return rep
    for a in F.elements:
        for b in F.elements:
            if d[F.table[a][b]] != G.table[d[a]][d[b]]:
                v.append(Violation("BOUNDARY_HOM", (a, b)))
                break
        else:
            continue
        break
    if len(cm.gact) != G.order:
        v.append(Violation("G_ACTION", ("wrong number of rows",)))
        return rep
    for g in G.elements:
        if not is_automorphism(F, cm.gact[g]):
            v.append(Violation("G_ACTION", (g,)))
            return rep
    if cm.gact[0] != tuple(F.elements):
        v.append(Violation("G_ACTION", (0,)))
    for g in G.elements:
        for h in G.elements:
            if cm.gact[G.table[g][h]] != compose_perms(cm.gact[g], cm.gact[h]):
                v.append(Violation("G_ACTION", (g, h)))
                break
        else:
            continue
        break
    for s in Gam.elements:
        aF, aG = cm.F.act[s], cm.G.act[s]
        bad = next((f for f in F.elements if d[aF[f]] != aG[d[f]]), None)
        if bad is not None:
            v.append(Violation("GAMMA_EQUIVARIANCE", (s, bad)))
            break
    # CM1
    for g in G.elements:
        row = cm.gact[g]
        bad = next((f for f in F.elements if d[row[f]] != G.conj(g, d[f])), None)
        if bad is not None:
            v.append(Violation("CM1", (g, bad)))
            break
    # CM2 (Peiffer)
    done = False
    for f in F.elements:
        row = cm.gact[d[f]]
        for f2 in F.elements:
            if row[f2] != F.conj(f, f2):
                v.append(Violation("CM2", (f, f2)))
                done = True
                break
        if done:
            break
    # Γ-compatibility
    done = False
    for s in Gam.elements:
        aF, aG = cm.F.act[s], cm.G.act[s]
        for g in G.elements:
            for f in F.elements:
                if aF[cm.gact[g][f]] != cm.gact[aG[g]][aF[f]]:
                    v.append(Violation("GAMMA_COMPAT", (s, g, f)))
                    done = True
                    break
            if done:
                break
        if done:
            break
    ZF, _ = center(F)
    zf = set(ZF)
    rep.kernel_central = all(k in zf for k in cm.boundary.kernel)
    rep.image_normal = is_normal(G, cm.boundary.image)
    if not v:
        if not rep.kernel_central:
            v.append(Violation("KERNEL_CENTRAL", tuple(cm.boundary.kernel)))
        if not rep.image_normal:
            v.append(Violation("IMAGE_NORMAL", tuple(cm.boundary.image)))
    return rep


@dataclass(frozen=True)
class QuasiAbelianVerdict:
    center_acts_trivially: bool
    generated_by_image_and_center: bool
    center_surjects: bool

    @property
    def holds(self):
        return self.center_acts_trivially and self.generated_by_image_and_center and self.center_surjects

    def __bool__(self):
        return self.holds

    def as_tuple(self):
        return (self.center_acts_trivially, self.generated_by_image_and_center, self.center_surjects)


@memoize
def is_quasi_abelian(cm):
    F, G = cm.F.group, cm.G.group
    ZG, _ = center(G)
    ident = tuple(F.elements)
    c1 = all(cm.gact[z] == ident for z in ZG)
    im = cm.image
    prods = {G.table[x][z] for x in im for z in ZG}
    c2 = len(prods) == G.order
    ZF, _ = center(F)
    im_sub, _ = _image_group(cm)
    Zim = [im[i] for i in center(im_sub)[0]]
    c3 = {cm.d(z) for z in ZF} == set(Zim)
    return QuasiAbelianVerdict(c1, c2, c3)


def _image_group(cm):
    from .grp import subgroup

    return subgroup(cm.G.group, cm.image)


@dataclass(frozen=True, eq=False)
class CenterComplex:
    """The abelian crossed module Z(F) -> Z(G) with its inclusions into F and G."""

    ZF: GammaGroup
    ZG: GammaGroup
    dZ: GroupHom
    incF: GroupHom
    incG: GroupHom

    def as_crossed_module(self):
        return abelian_crossed_module(self.ZF, self.ZG, self.dZ)


@memoize
def center_complex(cm):
    qa = is_quasi_abelian(cm)
    if not (qa.center_acts_trivially and qa.generated_by_image_and_center):
        raise NotCentrable("conditions (i) and (ii) are required for the center complex")
    return _center_complex(cm)


def _center_complex(cm):
    ZFe, _ = center(cm.F.group)
    ZGe, _ = center(cm.G.group)
    ZF, incF = sub_gamma(cm.F, ZFe)
    ZG, incG = sub_gamma(cm.G, ZGe)
    pos = {e: i for i, e in enumerate(incG.map)}
    dZ = GroupHom(ZF.group, ZG.group, tuple(pos[cm.d(z)] for z in incF.map))
    K = CenterComplex(ZF, ZG, dZ, incF, incG)
    kerZ = {incF.map[x] for x in dZ.kernel}
    assert kerZ == set(cm.kernel), "ker dZ must equal ker boundary"
    return K


def abelian_crossed_module(A, B, d, name=""):
    """(A -> B) with trivial B-action; A, B abelian Γ-groups, d a Γ-hom."""
    ident = tuple(A.group.elements)
    return CrossedModule(A, B, d, tuple(ident for _ in B.group.elements), name)


def conjugation_module(G, N, name=""):
    """(N ↪ G) with G acting on N by conjugation; G a Γ-group and N a Γ-stable normal subgroup."""
    NG, incl = sub_gamma(G, N)
    pos = {e: i for i, e in enumerate(incl.map)}
    gact = tuple(
        tuple(pos[G.group.conj(g, n)] for n in incl.map) for g in G.group.elements
    )
    return CrossedModule(NG, G, incl, gact, name)


def identity_module(G, name=""):
    return conjugation_module(G, list(G.group.elements), name)


@dataclass(frozen=True, eq=False)
class XModMorphism:
    source: CrossedModule
    target: CrossedModule
    f_map: GroupHom
    g_map: GroupHom

    def validate(self):
        s, t = self.source, self.target
        GammaHom(s.F, t.F, self.f_map).validate()
        GammaHom(s.G, t.G, self.g_map).validate()
        fm, gm = self.f_map.map, self.g_map.map
        for f in s.F.group.elements:
            if gm[s.d(f)] != t.d(fm[f]):
                raise ValueError(f"boundaries do not commute at f={f}")
        for g in s.G.group.elements:
            for f in s.F.group.elements:
                if fm[s.act(g, f)] != t.act(gm[g], fm[f]):
                    raise ValueError(f"actions do not commute at g={g}, f={f}")
        return self


def identity_morphism(cm):
    F, G = cm.F.group, cm.G.group
    return XModMorphism(cm, cm, GroupHom(F, F, tuple(F.elements)), GroupHom(G, G, tuple(G.elements)))


def embedding_morphism(cm):
    """Inclusion of the center complex (as an abelian crossed module) into ``cm``."""
    K = center_complex(cm)
    m = XModMorphism(K.as_crossed_module(), cm, K.incF, K.incG)
    return m.validate()


def is_quasi_isomorphism(m):
    s, t = m.source, m.target
    fm, gm = m.f_map.map, m.g_map.map
    ks = s.kernel
    kt = set(t.kernel)
    kimg = [fm[k] for k in ks]
    if len(set(kimg)) != len(ks) or set(kimg) != kt:
        return False
    Qs, ps = quotient(s.G.group, s.image)
    Qt, pt = quotient(t.G.group, t.image)
    induced = {}
    for g in s.G.group.elements:
        q = ps.map[g]
        v = pt.map[gm[g]]
        if induced.setdefault(q, v) != v:
            return False
    return len(set(induced.values())) == Qs.order == Qt.order


def inn_iso(cm):
    """The isomorphism Inn(F) -> Inn(G) induced by the boundary."""
    if not is_quasi_abelian(cm):
        raise NotQuasiAbelian("inn_iso needs a quasi-abelian crossed module")
    F, G = cm.F.group, cm.G.group
    _, pF = quotient(F, center(F)[0])
    _, pG = quotient(G, center(G)[0])
    m = [None] * pF.target.order
    for f in F.elements:
        v = pG.map[cm.d(f)]
        q = pF.map[f]
        if m[q] is None:
            m[q] = v
        elif m[q] != v:
            raise AssertionError("boundary does not descend to Inn")
    hom = GroupHom(pF.target, pG.target, tuple(m)).validate()
    if not (hom.is_injective and hom.is_surjective):
        raise AssertionError("induced map Inn(F) -> Inn(G) is not bijective")
    return hom


def centralizer_of_image_is_center(cm):
    G = cm.G.group
    return sorted(centralizer(G, cm.image)) == center(G)[0]


def xmod_center(cm):
    """The center (F^G -> Z(G) ∩ St_G(F)) of a crossed module and its inclusion morphism."""
    F, G = cm.F.group, cm.G.group
    ident = tuple(F.elements)
    FG = [f for f in F.elements if all(cm.gact[g][f] == f for g in G.elements)]
    FG = [f for f in FG if all(a[f] in FG for a in cm.F.act)]
    ZGe, _ = center(G)
    St = [z for z in ZGe if cm.gact[z] == ident]
    A, incA = sub_gamma(cm.F, FG)
    B, incB = sub_gamma(cm.G, St)
    pos = {e: i for i, e in enumerate(incB.map)}
    d = GroupHom(A.group, B.group, tuple(pos[cm.d(f)] for f in incA.map))
    C = abelian_crossed_module(A, B, d)
    return XModMorphism(C, cm, incA, incB)


def is_quasi_isomorphic_to_center(cm):
    """Alternative quasi-abelian predicate: the center inclusion is a quasi-isomorphism."""
    try:
        m = xmod_center(cm)
    except KeyError:
        return False
    return is_quasi_isomorphism(m)
