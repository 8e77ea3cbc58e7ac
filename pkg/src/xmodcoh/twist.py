"""Twisting Γ-structures by 1-cocycles and the fiber structure of ab^1.

For a 1-cocycle c of G the twisted action on G is σ * x = c_σ σ(x) c_σ^-1
and on F it is σ * f = ^{c_σ}σ(f).  The translation of cocycles is

    θ_c(q)_σ = q_σ c_σ^-1,

which sends the class of c to the trivial class.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ._memo import memoize
from .abcoh import hypercohomology, les_long_maps
from .abmap import ab, d1, delta0, phi
from .grp import GammaGroup
from .nacoh import act_h0_table, h1, mapped
from .xmod import CrossedModule, center_complex


@dataclass(frozen=True, eq=False)
class TwistedGroup:
    base: GammaGroup
    cocycle: tuple
    result: GammaGroup


def twist_gamma_group(GG, c):
    """Twist a Γ-group by one of its own 1-cocycles (inner twist)."""
    G = GG.group
    act = tuple(
        tuple(G.conj(c[s], GG.act[s][x]) for x in G.elements) for s in range(GG.gamma.order)
    )
    return TwistedGroup(GG, tuple(c), GammaGroup(GG.gamma, G, act))


@memoize
def twist_xmod(cm, c):
    """Twist both F and G by a 1-cocycle ``c`` of G; the boundary and G-action are unchanged."""
    c = tuple(c)
    TG = twist_gamma_group(cm.G, c).result
    F = cm.F.group
    actF = tuple(
        tuple(cm.gact[c[s]][cm.F.act[s][f]] for f in F.elements) for s in range(cm.gamma.order)
    )
    TF = GammaGroup(cm.gamma, F, actF)
    name = f"{cm.name}^{c}" if cm.name else ""
    return CrossedModule(TF, TG, cm.boundary, cm.gact, name)


def theta_cocycle(G, q, c):
    return tuple(G.table[q[s]][G.inv[c[s]]] for s in range(len(q)))


def theta_inverse_cocycle(G, q, c):
    return tuple(G.table[q[s]][c[s]] for s in range(len(q)))


@memoize
def theta(GG, c):
    """H^1(Γ, G) -> H^1(Γ, ᶜG), q ↦ q·c^-1."""
    c = tuple(c)
    T = twist_gamma_group(GG, c).result
    return mapped(h1(GG), h1(T), lambda q: theta_cocycle(GG.group, q, c), "theta")


def theta_oracles(GG, c):
    """θ_c is a bijection and sends the class of c to the basepoint."""
    t = theta(GG, c)
    H = h1(GG)
    return t.is_bijective and t(H.classify(c)) == t.target.basepoint


def theta_composition(GG, c, c2):
    """θ_{c2} ∘ θ_c = θ_{c2·c} for a cocycle c2 of the twist by c."""
    G = GG.group
    T = twist_gamma_group(GG, c).result
    prod = tuple(G.table[c2[s]][c[s]] for s in range(len(c)))
    return theta(T, c2).compose(theta(GG, c)).images == theta(GG, prod).images


def _same_center(cm, cm2):
    K, K2 = center_complex(cm), center_complex(cm2)
    return (
        K.ZF.act == K2.ZF.act
        and K.ZG.act == K2.ZG.act
        and K.dZ.map == K2.dZ.map
        and K.incF.map == K2.incF.map
        and K.incG.map == K2.incG.map
    )


def _ab_translate(cm2, cm, i):
    """Identification of H^i_ab of a twist with H^i_ab of cm (equal tables)."""
    return mapped(
        hypercohomology(center_complex(cm2), i), hypercohomology(center_complex(cm), i), lambda r: r, "="
    )


def check_prop311(cm, c, sign=-1):
    """ᶜab^1(θ_c(q)) = ab^1(q) + sign·ab^1([c]) for all q; the true statement has sign = -1."""
    c = tuple(c)
    cm2 = twist_xmod(cm, c)
    if not _same_center(cm, cm2):
        return False
    a1, a1t = ab(cm, 1), ab(cm2, 1)
    tr = _ab_translate(cm2, cm, 1)
    Hab = a1.target
    H1 = h1(cm.G)
    shift = a1(H1.classify(c))
    if sign < 0:
        shift = Hab.neg(shift)
    th = theta(cm.G, c)
    return all(tr(a1t(th(q))) == Hab.add(a1(q), shift) for q in range(len(H1)))


def check_cor312(cm):
    """ab^1(p·q) = j^(1)(p) + ab^1(q) for p ∈ H^1(Z(G)), q ∈ H^1(G), with (p·q)_σ = p_σ q_σ."""
    K = center_complex(cm)
    j1 = les_long_maps(cm)[("j", 1)]
    HZ = j1.source
    H1 = h1(cm.G)
    a1 = ab(cm, 1)
    G = cm.G.group
    inc = K.incG.map
    for p in range(len(HZ)):
        pc = HZ.reps[p]
        for q in range(len(H1)):
            qc = H1.reps[q]
            pq = tuple(G.table[inc[pc[s]]][qc[s]] for s in range(len(qc)))
            if a1(H1.classify(pq)) != a1.target.add(j1(p), a1(q)):
                return False
    return True


# -- orbits of the H^0_ab action and the fibers of ab^1 ----------------------


def _h0ab_action(cm):
    """table[p][y]: action of y ∈ H^0_ab on p ∈ H^1(F) through φ0."""
    tab = act_h0_table(cm)
    p0 = phi(cm, 0)
    return [[row[p0(y)] for y in range(len(p0.source))] for row in tab]


def orbit_partition(cm):
    """Orbits of H^1(F) under H^0_ab, as a list of frozensets."""
    act = _h0ab_action(cm)
    seen, orbits = set(), []
    for p in range(len(act)):
        if p in seen:
            continue
        o = frozenset(act[p])
        seen |= o
        orbits.append(o)
    return orbits


@dataclass
class FiberReport:
    stabilizers: bool = True  # (a)
    injection: bool = True  # (b)
    fiber_bijections: bool = True  # (c)
    cardinality: bool = True  # (d)
    twist_compatible: bool = True  # (e)
    sizes: dict = field(default_factory=dict)

    @property
    def ok(self):
        return self.stabilizers and self.injection and self.fiber_bijections and self.cardinality and self.twist_compatible


def _stabilizers_match(cm):
    """Stab(p) under H^0_ab equals the image of ab^0 of the twist by ∂∘p."""
    act = _h0ab_action(cm)
    H1F = h1(cm.F)
    d = cm.boundary.map
    for p, pc in enumerate(H1F.reps):
        stab = frozenset(y for y, v in enumerate(act[p]) if v == p)
        cm2 = twist_xmod(cm, tuple(d[x] for x in pc))
        img = frozenset(_ab_translate(cm2, cm, 0).compose(ab(cm2, 0)).images)
        if stab != img:
            return False
    return True


def _orbits_inject(cm):
    """∂^(1) is constant exactly on H^0_ab-orbits and its image is ker ab^1."""
    m = d1(cm)
    orbits = orbit_partition(cm)
    values = [{m(p) for p in o} for o in orbits]
    if any(len(v) != 1 for v in values):
        return False
    flat = [next(iter(v)) for v in values]
    return len(set(flat)) == len(flat) and m.image == ab(cm, 1).kernel


def _twist_compatible(cm):
    """θ_p(p·y) = ᵖδ0(y) and θ_{∂p} ∘ ∂^(1) = ᵖ∂^(1) ∘ θ_p, for all p ∈ H^1(F), y ∈ H^0_ab."""
    act = _h0ab_action(cm)
    H1F = h1(cm.F)
    F = cm.F.group
    d = cm.boundary.map
    for p, pc in enumerate(H1F.reps):
        P = tuple(d[x] for x in pc)
        cm2 = twist_xmod(cm, P)
        tF = mapped(H1F, h1(cm2.F), lambda q: theta_cocycle(F, q, pc), "theta_p")
        dl2 = delta0(cm2).compose(_ab_translate(cm, cm2, 0))
        if any(tF(act[p][y]) != dl2(y) for y in range(len(dl2.source))):
            return False
        lhs = theta(cm.G, P).compose(d1(cm))
        rhs = d1(cm2).compose(tF)
        if lhs.images != rhs.images:
            return False
    return True


def fibers_of_ab1(cm):
    """Verify the orbit/fiber decomposition of H^1(G) over the image of ab^1."""
    rep = FiberReport()
    rep.stabilizers = _stabilizers_match(cm)
    rep.injection = _orbits_inject(cm)
    rep.twist_compatible = _twist_compatible(cm)
    H1G = h1(cm.G)
    a1 = ab(cm, 1)
    total = 0
    for y in sorted(a1.image):
        q = min(k for k in range(len(H1G)) if a1(k) == y)
        qc = H1G.reps[q]
        cm2 = twist_xmod(cm, qc)
        fiber = [k for k in range(len(H1G)) if a1(k) == y]
        th = theta(cm.G, qc)
        ker2 = ab(cm2, 1).kernel
        # θ_q carries the fiber onto ker ᑫab^1, which the twisted ∂^(1) identifies with the orbit set
        if sorted(th(k) for k in fiber) != sorted(ker2):
            rep.fiber_bijections = False
        n_orbits = len(orbit_partition(cm2))
        if not _orbits_inject(cm2) or n_orbits != len(fiber):
            rep.fiber_bijections = False
        rep.sizes[y] = n_orbits
        total += n_orbits
    rep.cardinality = total == len(H1G)
    return rep


def twist_suite(cm):
    """All twisting verdicts for a quasi-abelian instance, quantified over H^1(G)."""
    from .xmod import is_quasi_abelian, validate

    H1G = h1(cm.G)
    out = {"prop311": True, "twist_valid": True, "twist_quasi_abelian": True, "theta": True}
    for c in H1G.reps:
        cm2 = twist_xmod(cm, c)
        out["twist_valid"] &= validate(cm2).ok
        out["twist_quasi_abelian"] &= bool(is_quasi_abelian(cm2)) == bool(is_quasi_abelian(cm))
        out["theta"] &= theta_oracles(cm.G, c)
        out["prop311"] &= check_prop311(cm, c)
    out["cor312"] = check_cor312(cm)
    fr = fibers_of_ab1(cm)
    out["stabilizers"] = fr.stabilizers
    out["orbit_injection"] = fr.injection
    out["fiber_bijections"] = fr.fiber_bijections
    out["fiber_cardinality"] = fr.cardinality
    out["twist_compatible"] = fr.twist_compatible
    out["h0ab_action"] = check_h0ab_action(cm)
    return out


def check_h0ab_action(cm):
    """δ0(y1 + y2) = δ0(y1)·y2, and the action is transitive iff δ0 is onto."""
    act = _h0ab_action(cm)
    dl = delta0(cm)
    Hab = dl.source
    compat = all(
        dl(Hab.add(y1, y2)) == act[dl(y1)][y2] for y1 in range(len(Hab)) for y2 in range(len(Hab))
    )
    transitive = len(set(act[h1(cm.F).basepoint])) == len(act)
    return compat and transitive == dl.is_surjective
