"""Abelianization maps and the main exact sequence.

Hyper-cocycles of the center complex embed into crossed-module cocycles by
the inclusions Z(F) ⊂ F and Z(G) ⊂ G:

* degree 0: (a, b) ↦ (b,) + a
* degree 1: (a, b) ↦ b + a

and the abelianization maps in degrees 0 and 1 are the composites of the
inverse of that embedding with the maps induced by (1 -> G) ⊂ (F -> G).
In degree 2 the map goes through the simply transitive action of
H^2(Z(G)) on the lien H^2 of G.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._memo import memoize
from .abcoh import (
    cohomology,
    hypercohomology,
    les_kamb_maps,
    les_long_maps,
    split_total,
)
from .errors import NoUniqueTranslate, NotQuasiAbelian
from .grp import GammaGroup, restrict_operators, sub_gamma
from .nacoh import (
    act_h0_table,
    act_h2_table,
    d_map,
    h1,
    h2_lien,
    lien_data,
    mapped,
    seven_term_maps,
    xmod_h,
)
from .sets import CohMap, Joint, SequenceReport, exact_at, injective_pointed
from .xmod import CrossedModule, center_complex, inn_iso, is_quasi_abelian


def _require_qa(cm):
    if not is_quasi_abelian(cm):
        raise NotQuasiAbelian(f"{cm.name or 'instance'} is not quasi-abelian")


def _translate(src, dst, label):
    """Identity on representatives between two sets computed from equal tables."""
    return mapped(src, dst, lambda r: r, label)


@memoize
def phi(cm, i):
    """H^i_ab -> H^i(F -> G) for i = 0, 1; verified bijective by callers."""
    _require_qa(cm)
    K = center_complex(cm)
    iF, iG = K.incF.map, K.incG.map
    Hab, H = hypercohomology(K, i), xmod_h(cm, i)
    if i == 0:
        fn = lambda r: (iG[split_total(K, 0, r)[1][0]],) + tuple(iF[x] for x in split_total(K, 0, r)[0])
    elif i == 1:
        def fn(r):
            a, b = split_total(K, 1, r)
            return tuple(iG[x] for x in b) + tuple(iF[x] for x in a)
    else:
        raise ValueError("phi is defined in degrees 0 and 1")
    return mapped(Hab, H, fn, f"phi{i}")


def psi(cm, i):
    maps = seven_term_maps(cm)
    return maps[2] if i == 0 else maps[5]


@memoize
def ab(cm, i):
    """The abelianization map H^i(G) -> H^i_ab, i = 0, 1."""
    p = phi(cm, i)
    if not p.is_bijective:
        raise AssertionError(f"phi{i} is not bijective")
    return p.inverse().compose(psi(cm, i), f"ab{i}")


@memoize
def delta0(cm):
    """H^0_ab -> H^1(F)."""
    return seven_term_maps(cm)[3].compose(phi(cm, 0), "delta0")


@memoize
def delta1(cm):
    """H^1_ab -> lien H^2(F): y ↦ π^(1)(y)·ε_F."""
    _require_qa(cm)
    pi1 = les_long_maps(cm)[("pi", 1)]
    ZF = lien_data(cm.F).Z
    to_lien = _translate(pi1.target, cohomology(ZF, 2), "ZF")
    tab = act_h2_table(cm.F)
    eps = h2_lien(cm.F).basepoint
    images = [tab[to_lien(pi1(y))][eps] for y in range(len(pi1.source))]
    return CohMap(pi1.source, h2_lien(cm.F), images, "delta1")


def d1(cm):
    return seven_term_maps(cm)[4]


def _d2_cocycle(cm, z):
    n = cm.gamma.order
    ii = inn_iso(cm).map
    d = cm.boundary.map
    return tuple(ii[v] for v in z[:n]) + tuple(d[x] for x in z[n:])


@memoize
def d2(cm):
    """Lien H^2(F) -> lien H^2(G): (v, g) ↦ (∂̄(v), ∂(g))."""
    _require_qa(cm)
    return mapped(h2_lien(cm.F), h2_lien(cm.G), lambda z: _d2_cocycle(cm, z), "d2")


def d2_well_defined(cm):
    HF, HG = h2_lien(cm.F), h2_lien(cm.G)
    m = d2(cm)
    return all(HG.classify(_d2_cocycle(cm, z)) == m(k) for z, k in HF.lookup.items())


@memoize
def ab2(cm):
    """Lien H^2(G) -> H^2_ab: s = x·ε_G ↦ j^(2)(x)."""
    _require_qa(cm)
    tab = act_h2_table(cm.G)
    H = h2_lien(cm.G)
    eps = H.basepoint
    j2 = les_long_maps(cm)[("j", 2)]
    from_lien = _translate(cohomology(lien_data(cm.G).Z, 2), j2.source, "ZG")
    images = []
    for s in range(len(H)):
        xs = [x for x in range(len(tab)) if tab[x][eps] == s]
        if len(xs) != 1:
            raise NoUniqueTranslate(f"{len(xs)} translates of ε_G reach class {s}")
        images.append(j2(from_lien(xs[0])))
    return CohMap(H, j2.target, images, "ab2")


@memoize
def t_map(cm):
    """Lien H^2(G) -> H^2(coker ∂), the composite of ab2 with t_ab^(2)."""
    return les_kamb_maps(cm)[("t_ab", 2)].compose(ab2(cm), "t")


def check_t_map(cm):
    """t(x·ε_G) = c^(2)(x) for every x."""
    tab = act_h2_table(cm.G)
    eps = h2_lien(cm.G).basepoint
    c2 = les_kamb_maps(cm)[("c", 2)]
    from_lien = _translate(cohomology(lien_data(cm.G).Z, 2), c2.source, "ZG")
    t = t_map(cm)
    return all(t(tab[x][eps]) == c2(from_lien(x)) for x in range(len(tab)))


@memoize
def btilde(cm):
    """H^1(G) -> H^1(Inn F): q ↦ ∂̄^-1(b_G(q))."""
    _require_qa(cm)
    LG, LF = lien_data(cm.G), lien_data(cm.F)
    back = inn_iso(cm)
    inv = [None] * back.target.order
    for x, y in enumerate(back.map):
        inv[y] = x
    pm = LG.proj.map
    return mapped(h1(cm.G), h1(LF.inn), lambda q: tuple(inv[pm[x]] for x in q), "btilde1")


def check_lemma316(cm):
    """π^(1) ∘ ab^1 = d_F ∘ b̃^(1) on every class of H^1(G)."""
    pi1 = les_long_maps(cm)[("pi", 1)]
    lhs = pi1.compose(ab(cm, 1))
    dF = d_map(cm.F)
    to_K = _translate(dF.target, pi1.target, "ZF")
    rhs = to_K.compose(dF.compose(btilde(cm)))
    return lhs.images == rhs.images


def check_comp(cm):
    """∂^(2)(x·s) = ∂_Z^(2)(x)·∂^(2)(s) for all x ∈ H^2(Z(F)), s ∈ lien H^2(F)."""
    tabF, tabG = act_h2_table(cm.F), act_h2_table(cm.G)
    dZ2 = les_long_maps(cm)[("dZ", 2)]
    ZF2 = cohomology(lien_data(cm.F).Z, 2)
    to_K = _translate(ZF2, dZ2.source, "ZF")
    from_K = _translate(dZ2.target, cohomology(lien_data(cm.G).Z, 2), "ZG")
    m = d2(cm)
    for x in range(len(ZF2)):
        y = from_K(dZ2(to_K(x)))
        for s in range(len(tabF[0])):
            if m(tabF[x][s]) != tabG[y][m(s)]:
                return False
    return True


def check_ab1_via_extension(cm):
    """For surjective ∂, ab^1 is the coboundary H^1(G) -> H^2(ker ∂) followed by (a ↦ (a, 0))."""
    if not cm.is_surjective:
        return None
    n = cm.gamma.order
    F, Gam = cm.F.group, cm.gamma
    kappa = les_kamb_maps(cm)[("kappa", 1)]
    lift = [None] * cm.G.group.order
    for f in F.elements:
        if lift[cm.d(f)] is None:
            lift[cm.d(f)] = f
    kpos = {}
    ker_sub, inc = sub_gamma(cm.F, cm.kernel)
    for i, e in enumerate(inc.map):
        kpos[e] = i

    def cobound(q):
        f = [lift[x] for x in q]
        out = []
        for s in range(n):
            for t in range(n):
                u = F.table[f[s]][cm.F.act[s][f[t]]]
                out.append(kpos[F.table[u][F.inv[f[Gam.table[s][t]]]]])
        return tuple(out)

    cb = mapped(h1(cm.G), kappa.source, cobound, "coboundary")
    return kappa.compose(cb).images == ab(cm, 1).images


# -- the main sequence -------------------------------------------------------


@memoize
def thirteen_term_maps(cm):
    _require_qa(cm)
    lm = les_long_maps(cm)
    p = seven_term_maps(cm)
    return [
        p[0],  # H-1 -> H0(F)
        p[1],  # H0(F) -> H0(G)
        ab(cm, 0),
        delta0(cm),
        d1(cm),
        ab(cm, 1),
        delta1(cm),
        d2(cm),
        ab2(cm),
        lm[("pi", 2)],
        lm[("dZ", 3)],
    ]


SET_NAMES = [
    "H-1", "H0_F", "H0_G", "H0_ab", "H1_F", "H1_G", "H1_ab",
    "H2_F", "H2_G", "H2_ab", "H3_ZF", "H3_ZG",
]


def theorem42(cm):
    """The 13-term sequence with a verdict per joint; never raises on a mathematical failure."""
    maps = thirteen_term_maps(cm)
    rep = SequenceReport(maps=list(maps))
    ok, w = injective_pointed(maps[0])
    rep.joints.append(Joint("H-1", ok, w))
    for name, f, g in zip(SET_NAMES[1:], maps, maps[1:]):
        if name == "H1_ab":
            continue
        ok, w = exact_at(f, g)
        rep.joints.append(Joint(name, ok, w))
    ok, w = ab1_image_criterion(cm)
    rep.joints.append(Joint("H1_ab", ok, w, "im ab1 = delta1^-1(neutral)"))
    HF, HG = h2_lien(cm.F), h2_lien(cm.G)
    m2 = d2(cm)
    rep.extras.append(Joint("d2_well_defined", d2_well_defined(cm)))
    rep.extras.append(Joint("d2_neutral", all(m2(k) in HG.neutral for k in HF.neutral)))
    rep.extras.append(Joint("comp", check_comp(cm)))
    rep.extras.append(Joint("neutral_chain", check_neutral_chain(cm)))
    for idx in (0, 1, 2, 9, 10):
        f = maps[idx]
        rep.extras.append(Joint(f"hom_{f.label}", bool(f.is_homomorphism())))
    rep.extras.append(Joint("phi0_bijective", phi(cm, 0).is_bijective))
    rep.extras.append(Joint("phi1_bijective", phi(cm, 1).is_bijective))
    return rep


def set_cardinalities(cm):
    maps = thirteen_term_maps(cm)
    sets = [maps[0].source] + [m.target for m in maps]
    return {name: len(s) for name, s in zip(SET_NAMES, sets)}


def ab1_image_criterion(cm):
    """im(ab^1) = {y : δ1(y) is neutral}; returns (ok, witness)."""
    a1, dl = ab(cm, 1), delta1(cm)
    neutral = h2_lien(cm.F).neutral
    locus = frozenset(y for y in range(len(dl.source)) if dl(y) in neutral)
    im = a1.image
    if im == locus:
        return True, None
    return False, min(im ^ locus)


def check_neutral_chain(cm):
    """∂^(2)(neutral F) ⊆ neutral G ⊆ ker ab^2 = im ∂^(2)."""
    HF, HG = h2_lien(cm.F), h2_lien(cm.G)
    m2, a2 = d2(cm), ab2(cm)
    first = {m2(k) for k in HF.neutral} <= HG.neutral
    second = HG.neutral <= a2.kernel
    third = a2.kernel == m2.image
    return first and second and third


@dataclass
class Cor45Verdict:
    hypothesis: bool
    ab1_surjective: bool | None = None
    neutral_iff_ab2_zero: bool | None = None

    @property
    def ok(self):
        if not self.hypothesis:
            return True
        return bool(self.ab1_surjective and self.neutral_iff_ab2_zero)


def cor45_predicate(cm):
    """If every lien class of F is neutral, ab^1 is onto and neutrality in H^2(G) is ab^2 = 0."""
    HF = h2_lien(cm.F)
    if HF.neutral != frozenset(range(len(HF))):
        return Cor45Verdict(False)
    HG = h2_lien(cm.G)
    a2 = ab2(cm)
    return Cor45Verdict(True, ab(cm, 1).is_surjective, HG.neutral == a2.kernel)


# -- restriction to a subgroup of Γ --------------------------------------------


def restrict_xmod(cm, sub):
    """The same crossed module with operators restricted to Γ' ≤ Γ; returns (cm', inclusion Γ' -> Γ)."""
    F2, incl = restrict_operators(cm.F, sub)
    G2, _ = restrict_operators(cm.G, sub)
    G2 = GammaGroup(F2.gamma, G2.group, G2.act)
    return CrossedModule(F2, G2, cm.boundary, cm.gact, f"{cm.name}|{len(sub)}"), incl


def _restrict_cochain(c, k, n, incl):
    """Restrict a degree-k cochain on Γ (radix n) along incl: Γ' -> Γ."""
    out = []
    for args in itertools.product(range(len(incl)), repeat=k):
        i = 0
        for a in args:
            i = i * n + incl[a]
        out.append(c[i])
    return tuple(out)


def _res_total(cm, cm2, i, incl):
    K = center_complex(cm)
    n = cm.gamma.order

    def fn(r):
        a, b = split_total(K, i, r)
        return _restrict_cochain(a, i + 1, n, incl) + _restrict_cochain(b, i, n, incl)

    return fn


def check_restriction(cm, sub):
    """Restriction to Γ' commutes with ab0, ab1, ∂^(1), δ1, ∂^(2) and the H^0 action; dict of verdicts."""
    cm2, inc = restrict_xmod(cm, sub)
    incl = inc.map
    n = cm.gamma.order
    res_G1 = lambda c: _restrict_cochain(c, 1, n, incl)
    res_xm0 = lambda c: (c[0],) + _restrict_cochain(c[1:], 1, n, incl)
    res_lien = lambda z: _restrict_cochain(z[:n], 1, n, incl) + _restrict_cochain(z[n:], 2, n, incl)

    def commutes(f, f2, rs, rt):
        rsrc = mapped(f.source, f2.source, rs, "res")
        rtgt = mapped(f.target, f2.target, rt, "res")
        return rtgt.compose(f).images == f2.compose(rsrc).images

    out = {}
    out["ab0"] = commutes(ab(cm, 0), ab(cm2, 0), lambda g: g, _res_total(cm, cm2, 0, incl))
    out["ab1"] = commutes(ab(cm, 1), ab(cm2, 1), res_G1, _res_total(cm, cm2, 1, incl))
    out["d1"] = commutes(d1(cm), d1(cm2), res_G1, res_G1)
    out["delta1"] = commutes(delta1(cm), delta1(cm2), _res_total(cm, cm2, 1, incl), res_lien)
    out["d2"] = commutes(d2(cm), d2(cm2), res_lien, res_lien)
    H1F, H0 = h1(cm.F), xmod_h(cm, 0)
    H1F2, H02 = h1(cm2.F), xmod_h(cm2, 0)
    tab, tab2 = act_h0_table(cm), act_h0_table(cm2)
    rF = mapped(H1F, H1F2, res_G1, "res")
    r0 = mapped(H0, H02, res_xm0, "res")
    out["act_h0"] = all(
        rF(tab[p][c]) == tab2[rF(p)][r0(c)] for p in range(len(H1F)) for c in range(len(H0))
    )
    return out
