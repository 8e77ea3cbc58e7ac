"""Nonabelian cohomology by cocycle enumeration.

Cocycle encodings (all normalized, flat tuples indexed by Γ-elements):

* ``H^1(Γ, G)``: ``c`` of length |Γ| with c(στ) = c(σ)·σ(c(τ));
  c ~ (σ ↦ g^-1 c(σ) σ(g)).
* lien ``H^2(Γ, G)``: ``(v_σ)_σ + (g_{σ,τ})_{σ,τ}`` where ``v_σ`` is an element of
  Inn(G) and the automorphism attached to σ is Int(lift(v_σ))∘σ.
* crossed-module ``H^0``: ``(b,) + (a_σ)_σ`` with ∂(a_σ) = b σ(b)^-1 and a a
  1-cocycle of F.
* crossed-module ``H^1``: ``(b_σ)_σ + (a_{σ,τ})_{σ,τ}`` with
  ∂(a_{σ,τ}) b_σ σ(b_τ) = b_στ and
  a_{ρσ,τ} a_{ρ,σ} = a_{ρ,στ} · ^{b_ρ}ρ(a_{σ,τ}).

Every class is represented by its lexicographically least member, and
classes are listed in order of their representatives, so the trivial class
is always index 0.
"""

from __future__ import annotations

import itertools
from collections import deque

from . import budget
from ._memo import memoize
from .abcoh import cohomology
from .errors import BudgetExceeded
from .grp import center_gamma, coset_lifts, generating_set, inner_gamma
from .sets import CohMap, Joint, PointedSet, SequenceReport, exact_at, injective_pointed


def orbit_classes(label, cocycles, moves, neutral_of=None, basepoint=0):
    """Partition ``cocycles`` into classes under the equivalence generated by ``moves``.

    ``moves(z)`` yields cocycles equivalent to ``z`` in one step.  The
    closure is taken by breadth-first search, so the result is correct even
    when one step does not reach a whole class.
    """
    cocycles = sorted(set(cocycles))
    universe = set(cocycles)
    lookup = {}
    reps = []
    neutral = set() if neutral_of else None
    for z in cocycles:
        if z in lookup:
            continue
        k = len(reps)
        reps.append(z)
        lookup[z] = k
        queue = deque([z])
        while queue:
            w = queue.popleft()
            if neutral_of and neutral_of(w):
                neutral.add(k)
            for u in moves(w):
                if u not in lookup:
                    if u not in universe:
                        raise AssertionError(f"{label}: move left the cocycle set at {u}")
                    lookup[u] = k
                    queue.append(u)
                elif lookup[u] != k:
                    raise AssertionError(f"{label}: classes overlap")
    return PointedSet(label, reps, lookup, basepoint, neutral)


def _slot_steps(n, G):
    """Normalized 1-cochains with a single generator value in one slot.

    Gauge moves compose, so these generate every equivalence and the orbit
    search in :func:`orbit_classes` closes them up.
    """
    gens = generating_set(G) or [0]
    return [tuple(g if k == s else 0 for k in range(n)) for s in range(1, n) for g in gens] or [(0,) * n]


def mapped(src, dst, fn, label):
    """CohMap induced by a cocycle-level function, evaluated on representatives."""
    return CohMap(src, dst, [dst.classify(fn(r)) for r in src.reps], label)


def _pairs(n):
    return [(s, t) for s in range(n) for t in range(n)]


# -- H^0 and H^1 of a Γ-group ------------------------------------------------


@memoize
def h0(GG):
    """Fixed points G^Γ as a group; classes are 1-tuples ``(g,)``."""
    G = GG.group
    pts = [g for g in G.elements if all(a[g] == g for a in GG.act)]
    lookup = {(g,): i for i, g in enumerate(pts)}
    mul = [[lookup[(G.table[a][b],)] for b in pts] for a in pts]
    return PointedSet("H0", [(g,) for g in pts], lookup, 0, None, mul)


@memoize
def one_cocycles(GG):
    """All normalized 1-cocycles Γ -> G, sorted."""
    Gam, G = GG.gamma, GG.group
    gens = generating_set(Gam)
    budget.check(G.order ** len(gens))
    out = []
    for vals in itertools.product(range(G.order), repeat=len(gens)):
        c = _extend_cocycle(GG, gens, vals)
        if c is not None:
            out.append(c)
    out.sort()
    return out


def _extend_cocycle(GG, gens, vals):
    Gam, G = GG.gamma, GG.group
    c = [None] * Gam.order
    c[0] = 0
    queue = deque([0])
    while queue:
        s = queue.popleft()
        for g, v in zip(gens, vals):
            t = Gam.table[s][g]
            w = G.table[c[s]][GG.act[s][v]]
            if c[t] is None:
                c[t] = w
                queue.append(t)
            elif c[t] != w:
                return None
    return tuple(c)


@memoize
def h1(GG):
    """H^1(Γ, G) as a pointed set."""
    G = GG.group
    act = GG.act
    n = GG.gamma.order

    def moves(c):
        for g in G.elements:
            gi = G.inv[g]
            yield tuple(G.table[G.table[gi][c[s]]][act[s][g]] for s in range(n))

    return orbit_classes("H1", one_cocycles(GG), moves)


# -- lien H^2 ----------------------------------------------------------------

def constrained_search(size, choices, constraints):
    """Enumerate arrays of length ``size`` (unset slots 0) filling ``choices``.

    ``choices`` is a list of (slot, candidates) in search order; each
    constraint is (slots, predicate(values)) and is evaluated as soon as the
    last of its slots that appears in ``choices`` has been assigned.
    """
    order = {p: i for i, (p, _) in enumerate(choices)}
    trig = [[] for _ in choices]
    upfront = []
    for slots, pred in constraints:
        idx = [order[p] for p in slots if p in order]
        (trig[max(idx)] if idx else upfront).append(pred)
    x = [0] * size
    if not all(pred(x) for pred in upfront):
        return
    limit = budget.current()
    visited = 0
    stack = [(0, 0)]
    # iterative depth-first search: (depth, next candidate index)
    while stack:
        depth, k = stack.pop()
        if depth == len(choices):
            yield tuple(x)
            continue
        slot, cands = choices[depth]
        if k >= len(cands):
            x[slot] = 0
            continue
        stack.append((depth, k + 1))
        x[slot] = cands[k]
        visited += 1
        if visited > limit:
            raise BudgetExceeded(visited, limit)
        if all(pred(x) for pred in trig[depth]):
            stack.append((depth + 1, 0))



class LienData:
    """Inn(G) with its Γ-action, the projection, the smallest lifts, and Z(G)."""

    def __init__(self, GG):
        self.GG = GG
        self.inn, self.proj = inner_gamma(GG)
        self.lift = coset_lifts(self.proj)
        self.Z, self.zinc = center_gamma(GG)
        G = GG.group
        self.coset = [[] for _ in range(self.inn.group.order)]
        for g in G.elements:
            self.coset[self.proj.map[g]].append(g)

    def auto(self, s, v):
        """Permutation x ↦ lift(v)·σ(x)·lift(v)^-1."""
        G = self.GG.group
        l = self.lift[v]
        a = self.GG.act[s]
        return tuple(G.conj(l, a[x]) for x in G.elements)


@memoize
def lien_data(GG):
    return LienData(GG)


@memoize
def lien_cocycles(GG):
    """All normalized lien 2-cocycles ``(v, g)`` for the outer action induced by GG."""
    L = lien_data(GG)
    G, Gam = GG.group, GG.gamma
    I = L.inn.group
    n = Gam.order
    T = G.table
    free = [(s, t) for s in range(1, n) for t in range(1, n)]
    budget.check(I.order ** (n - 1))
    out = []
    for vv in itertools.product(range(I.order), repeat=n - 1):
        v = (0,) + vv
        autos = [L.auto(s, v[s]) for s in range(n)]
        # [g_{σ,τ}] = v_σ σ̄(v_τ) v_στ^-1 in Inn(G)
        choices = []
        for s, t in free:
            target = I.table[I.table[v[s]][L.inn.act[s][v[t]]]][I.inv[v[Gam.table[s][t]]]]
            choices.append((s * n + t, L.coset[target]))
        constraints = []
        for s in range(1, n):
            for t in range(1, n):
                st = Gam.table[s][t]
                for u in range(1, n):
                    tu = Gam.table[t][u]
                    p1, p2, p3, p4 = t * n + u, s * n + tu, s * n + t, st * n + u
                    fs = autos[s]
                    constraints.append(
                        ((p1, p2, p3, p4),
                         lambda g, fs=fs, p1=p1, p2=p2, p3=p3, p4=p4: T[fs[g[p1]]][g[p2]] == T[g[p3]][g[p4]])
                    )
        out.extend(v + g for g in constrained_search(n * n, choices, constraints))
    out.sort()
    return out


def _lien_two_cocycle(G, Gam, autos, g, n):
    T = G.table
    for s in range(1, n):
        fs = autos[s]
        for t in range(1, n):
            st = Gam.table[s][t]
            for u in range(1, n):
                tu = Gam.table[t][u]
                if T[fs[g[t * n + u]]][g[s * n + tu]] != T[g[s * n + t]][g[st * n + u]]:
                    return False
    return True


@memoize
def h2_lien(GG):
    """Lien H^2 with unit class ε (index 0) and the neutral subset."""
    L = lien_data(GG)
    G, Gam = GG.group, GG.gamma
    I = L.inn.group
    n = Gam.order
    proj = L.proj.map
    autos = {}

    def auto(s, v):
        key = (s, v)
        if key not in autos:
            autos[key] = L.auto(s, v)
        return autos[key]

    T, inv = G.table, G.inv
    hs = _slot_steps(n, G)

    def moves(z):
        v, g = z[:n], z[n:]
        for h in hs:
            nv = tuple(I.table[proj[h[s]]][v[s]] for s in range(n))
            ng = [0] * (n * n)
            for s in range(1, n):
                fs = auto(s, v[s])
                for t in range(1, n):
                    st = Gam.table[s][t]
                    ng[s * n + t] = T[T[T[h[s]][fs[h[t]]]][g[s * n + t]]][inv[h[st]]]
            yield nv + tuple(ng)

    def neutral_of(z):
        return not any(z[n:])

    return orbit_classes("H2_lien", lien_cocycles(GG), moves, neutral_of)


def act_h2(GG, x, r):
    """Class of x·r for x ∈ H^2(Γ, Z(G)) and r ∈ lien H^2 (class indices)."""
    H = h2_lien(GG)
    HZ = cohomology(center_gamma_cached(GG), 2)
    return H.classify(act_h2_cocycle(GG, HZ.reps[x], H.reps[r]))


def act_h2_cocycle(GG, xc, z):
    n = GG.gamma.order
    G = GG.group
    inc = lien_data(GG).zinc.map
    v, g = z[:n], z[n:]
    return tuple(v) + tuple(G.table[inc[xc[i]]][g[i]] for i in range(n * n))


def center_gamma_cached(GG):
    return lien_data(GG).Z


@memoize
def act_h2_table(GG):
    """table[x][r] = class of x·r."""
    H = h2_lien(GG)
    HZ = cohomology(center_gamma_cached(GG), 2)
    return [[H.classify(act_h2_cocycle(GG, xc, z)) for z in H.reps] for xc in HZ.reps]


def check_act_well_defined(GG):
    """x·r does not depend on the chosen representatives of x and r."""
    H = h2_lien(GG)
    HZ = cohomology(center_gamma_cached(GG), 2)
    tab = act_h2_table(GG)
    for xc, xi in HZ.lookup.items():
        for z, ri in H.lookup.items():
            if H.classify(act_h2_cocycle(GG, xc, z)) != tab[xi][ri]:
                return False
    return True


def check_simply_transitive(GG):
    """For every r, x ↦ x·r is a bijection H^2(Z(G)) -> lien H^2 (one lien fiber)."""
    tab = act_h2_table(GG)
    H = h2_lien(GG)
    for r in range(len(H)):
        col = [row[r] for row in tab]
        if len(set(col)) != len(col) or len(col) != len(H):
            return False
    return True


# -- d, n and the sequences through H^1(Inn G) --------------------------------


@memoize
def d_map(GG):
    """H^1(Inn G) -> H^2(Z(G)): defect ℓ_στ (ℓ_σ σ(ℓ_τ))^-1 of the smallest lifts."""
    L = lien_data(GG)
    G, Gam = GG.group, GG.gamma
    n = Gam.order
    HI = h1(L.inn)
    HZ = cohomology(L.Z, 2)
    zpos = {e: i for i, e in enumerate(L.zinc.map)}

    def fn(p):
        l = [L.lift[x] for x in p]
        out = [0] * (n * n)
        for s in range(n):
            for t in range(n):
                u = G.table[l[s]][GG.act[s][l[t]]]
                out[s * n + t] = zpos[G.table[l[Gam.table[s][t]]][G.inv[u]]]
        return tuple(out)

    return mapped(HI, HZ, fn, "d")


@memoize
def n_map(GG):
    """H^1(Inn G) -> lien H^2: p ↦ class of (v = p, g = 1)."""
    L = lien_data(GG)
    n = GG.gamma.order
    return mapped(h1(L.inn), h2_lien(GG), lambda p: tuple(p) + (0,) * (n * n), "n")


@memoize
def inner_projection_map(GG):
    """H^1(G) -> H^1(Inn G)."""
    L = lien_data(GG)
    pm = L.proj.map
    return mapped(h1(GG), h1(L.inn), lambda c: tuple(pm[x] for x in c), "b")


@memoize
def center_inclusion_map(GG):
    """H^1(Z(G)) -> H^1(G)."""
    L = lien_data(GG)
    HZ1 = cohomology(L.Z, 1)
    inc = L.zinc.map
    return mapped(HZ1, h1(GG), lambda c: tuple(inc[x] for x in c), "i")


def bn_sequences(GG):
    """Exactness of H^1(Z) -> H^1(G) -> H^1(Inn G) -> H^2(Z(G)) and of the n-variant."""
    i, b, d, nn = center_inclusion_map(GG), inner_projection_map(GG), d_map(GG), n_map(GG)
    rep = SequenceReport(maps=[i, b, d, nn])
    for f, g in ((i, b), (b, d), (b, nn)):
        ok, w = exact_at(f, g)
        rep.joints.append(Joint(f"{f.label}|{g.label}", ok, w))
    H = h2_lien(GG)
    rep.joints.append(Joint("n_onto_neutral", nn.image == H.neutral))
    return rep


def check_prop37(GG):
    """n(p) = d(p)·ε for all p, and (d surjective ⇔ every lien class is neutral)."""
    tab = act_h2_table(GG)
    d, nn = d_map(GG), n_map(GG)
    H = h2_lien(GG)
    agree = all(nn(p) == tab[d(p)][H.basepoint] for p in range(len(d.source)))
    all_neutral = H.neutral == frozenset(range(len(H)))
    cor = d.is_surjective == all_neutral
    return agree and cor


# -- crossed-module cohomology -----------------------------------------------


@memoize
def xmod_h(cm, n):
    """Cohomology of a crossed module in degree -1, 0 or 1."""
    if n == -1:
        return _xmod_hm1(cm)
    if n == 0:
        return _xmod_h0(cm)
    if n == 1:
        return _xmod_h1(cm)
    raise ValueError("degree must be -1, 0 or 1")


def _xmod_hm1(cm):
    F = cm.F.group
    pts = [k for k in cm.kernel if all(a[k] == k for a in cm.F.act)]
    lookup = {(k,): i for i, k in enumerate(pts)}
    mul = [[lookup[(F.table[a][b],)] for b in pts] for a in pts]
    return PointedSet("H-1", [(k,) for k in pts], lookup, 0, None, mul)


def h0_product(cm, c1, c2):
    """(b1, a1)·(b2, a2) = (b2 b1, σ ↦ a2_σ · ^{σ(b2)} a1_σ)."""
    F, G = cm.F.group, cm.G.group
    b1, a1 = c1[0], c1[1:]
    b2, a2 = c2[0], c2[1:]
    aG = cm.G.act
    a = tuple(F.table[a2[s]][cm.gact[aG[s][b2]][a1[s]]] for s in range(len(a1)))
    return (G.table[b2][b1],) + a


def _xmod_h0(cm):
    F, G = cm.F.group, cm.G.group
    n = cm.gamma.order
    d = cm.boundary.map
    aG = cm.G.act
    Z1 = one_cocycles(cm.F)
    budget.check(G.order * len(Z1))
    cocycles = []
    for b in G.elements:
        want = [G.table[b][G.inv[aG[s][b]]] for s in range(n)]
        for a in Z1:
            if all(d[a[s]] == want[s] for s in range(n)):
                cocycles.append((b,) + a)

    def moves(z):
        b, a = z[0], z[1:]
        for h in F.elements:
            yield (G.table[d[h]][b],) + tuple(
                F.table[F.table[h][a[s]]][F.inv[cm.F.act[s][h]]] for s in range(n)
            )

    P = orbit_classes("H0_cm", cocycles, moves)
    P.mul = [[P.classify(h0_product(cm, x, y)) for y in P.reps] for x in P.reps]
    return P


@memoize
def xmod_h1_cocycles(cm):
    F, G, Gam = cm.F.group, cm.G.group, cm.gamma
    n = Gam.order
    d = cm.boundary.map
    aG, aF = cm.G.act, cm.F.act
    T = F.table
    fiber = [[] for _ in G.elements]
    for f in F.elements:
        fiber[d[f]].append(f)
    free = [(s, t) for s in range(1, n) for t in range(1, n)]
    budget.check(G.order ** (n - 1))
    out = []
    for bb in itertools.product(range(G.order), repeat=n - 1):
        b = (0,) + bb
        choices = []
        for s, t in free:
            u = G.table[b[s]][aG[s][b[t]]]
            choices.append((s * n + t, fiber[G.table[b[Gam.table[s][t]]][G.inv[u]]]))
        if any(not c for _, c in choices):
            continue
        constraints = []
        for r in range(1, n):
            tw = tuple(cm.gact[b[r]][aF[r][f]] for f in F.elements)
            for s in range(1, n):
                rs = Gam.table[r][s]
                for t in range(1, n):
                    st = Gam.table[s][t]
                    p1, p2, p3, p4 = rs * n + t, r * n + s, r * n + st, s * n + t
                    constraints.append(
                        ((p1, p2, p3, p4),
                         lambda a, tw=tw, p1=p1, p2=p2, p3=p3, p4=p4: T[a[p1]][a[p2]] == T[a[p3]][tw[a[p4]]])
                    )
        out.extend(b + a for a in constrained_search(n * n, choices, constraints))
    out.sort()
    return out


def _xmod_two_cocycle(cm, b, a, n):
    T = cm.F.group.table
    Gt = cm.gamma.table
    for r in range(1, n):
        gr = cm.gact[b[r]]
        ar = cm.F.act[r]
        for s in range(1, n):
            rs = Gt[r][s]
            for t in range(1, n):
                st = Gt[s][t]
                lhs = T[a[rs * n + t]][a[r * n + s]]
                rhs = T[a[r * n + st]][gr[ar[a[s * n + t]]]]
                if lhs != rhs:
                    return False
    return True


def _xmod_h1(cm):
    F, G, Gam = cm.F.group, cm.G.group, cm.gamma
    n = Gam.order
    d = cm.boundary.map
    aG, aF = cm.G.act, cm.F.act
    TF, TG = F.table, G.table
    steps = [(c, (0,) * n) for c in generating_set(G)] + [(0, h) for h in _slot_steps(n, F)]

    def moves(z):
        b, a = z[:n], z[n:]
        for c, h in steps:
            x = [TG[TG[c][b[s]]][G.inv[aG[s][c]]] for s in range(n)]
            gc = cm.gact[c]
            nb = tuple(TG[d[h[s]]][x[s]] for s in range(n))
            na = [0] * (n * n)
            for s in range(n):
                gx = cm.gact[x[s]]
                for t in range(n):
                    st = Gam.table[s][t]
                    m = TF[h[s]][gx[aF[s][h[t]]]]
                    na[s * n + t] = TF[TF[h[st]][gc[a[s * n + t]]]][F.inv[m]]
            yield nb + tuple(na)

    return orbit_classes("H1_cm", xmod_h1_cocycles(cm), moves)


# -- the seven-term sequence -------------------------------------------------


@memoize
def seven_term_maps(cm):
    G = cm.G.group
    n = cm.gamma.order
    d = cm.boundary.map
    Hm1, H0F, H0G = xmod_h(cm, -1), h0(cm.F), h0(cm.G)
    H0, H1F, H1G, H1 = xmod_h(cm, 0), h1(cm.F), h1(cm.G), xmod_h(cm, 1)
    return [
        mapped(Hm1, H0F, lambda k: k, "incl"),
        mapped(H0F, H0G, lambda f: (d[f[0]],), "d0"),
        mapped(H0G, H0, lambda g: (G.inv[g[0]],) + (0,) * n, "psi0"),
        mapped(H0, H1F, lambda c: c[1:], "delta0'"),
        mapped(H1F, H1G, lambda c: tuple(d[x] for x in c), "d1"),
        mapped(H1G, H1, lambda c: tuple(c) + (0,) * (n * n), "psi1"),
    ]


def act_h0_on_h1F_cocycle(cm, p, c):
    """(p·c)_σ = ^b(p_σ)·a_σ for p ∈ Z^1(F), c = (b, a)."""
    F = cm.F.group
    b, a = c[0], c[1:]
    gb = cm.gact[b]
    return tuple(F.table[gb[p[s]]][a[s]] for s in range(len(p)))


@memoize
def act_h0_table(cm):
    """table[p][c] = class of p·c in H^1(F)."""
    H1F, H0 = h1(cm.F), xmod_h(cm, 0)
    return [[H1F.classify(act_h0_on_h1F_cocycle(cm, p, c)) for c in H0.reps] for p in H1F.reps]


def act_h0_on_h1F(cm, p, c):
    return act_h0_table(cm)[p][c]


def prop24_sequence(cm):
    """1 -> H^-1 -> H^0(F) -> H^0(G) -> H^0 -> H^1(F) -> H^1(G) -> H^1 with exactness verdicts."""
    maps = seven_term_maps(cm)
    rep = SequenceReport(maps=list(maps))
    ok, w = injective_pointed(maps[0])
    rep.joints.append(Joint("H-1", ok, w))
    names = ["H0_F", "H0_G", "H0_cm", "H1_F", "H1_G"]
    for name, f, g in zip(names, maps, maps[1:]):
        ok, w = exact_at(f, g)
        rep.joints.append(Joint(name, ok, w))
    rep.extras.append(Joint("H0_quotient_injects", _h0_quotient_injects(cm)))
    rep.extras.append(Joint("action_compatible", _h0_action_compatible(cm)))
    rep.extras.append(Joint("action_transitive_iff_onto", _h0_action_transitivity(cm)))
    return rep


def _h0_quotient_injects(cm):
    """δ'0(c1) = δ'0(c2) iff c2 c1^-1 lies in the image of H^0(G)."""
    maps = seven_term_maps(cm)
    psi0, dl = maps[2], maps[3]
    H0 = dl.source
    imp = psi0.image
    inv = [row.index(0) for row in H0.mul]
    for c1 in range(len(H0)):
        for c2 in range(len(H0)):
            same = dl(c1) == dl(c2)
            if same != (H0.mul[c2][inv[c1]] in imp):
                return False
    return True


def _h0_action_compatible(cm):
    H0 = xmod_h(cm, 0)
    dl = seven_term_maps(cm)[3]
    tab = act_h0_table(cm)
    return all(
        dl(H0.mul[c1][c2]) == tab[dl(c1)][c2] for c1 in range(len(H0)) for c2 in range(len(H0))
    )


def _h0_action_transitivity(cm):
    tab = act_h0_table(cm)
    dl = seven_term_maps(cm)[3]
    orbit = set(tab[0])
    transitive = len(orbit) == len(tab)
    return orbit == dl.image and transitive == dl.is_surjective


# -- degenerate comparisons ---------------------------------------------------


def injective_comparison(cm):
    """For injective ∂: maps H^i(cm) -> H^i(coker ∂) for i = 0, 1."""
    from .grp import quotient_gamma

    C, proj = quotient_gamma(cm.G, cm.image)
    pm = proj.map
    H0, H1 = xmod_h(cm, 0), xmod_h(cm, 1)
    n = cm.gamma.order
    return {
        0: mapped(H0, h0(C), lambda c: (pm[c[0]],), "cm0->coker"),
        1: mapped(H1, h1(C), lambda c: tuple(pm[x] for x in c[:n]), "cm1->coker"),
    }


def surjective_comparison(cm):
    """For surjective ∂: maps H^{i+1}(ker ∂) -> H^i(cm) for i = -1, 0, 1."""
    from .grp import sub_gamma

    K, inc = sub_gamma(cm.F, cm.kernel)
    km = inc.map
    n = cm.gamma.order
    return {
        -1: mapped(cohomology(K, 0), xmod_h(cm, -1), lambda k: (km[k[0]],), "ker0->cm-1"),
        0: mapped(cohomology(K, 1), xmod_h(cm, 0), lambda k: (0,) + tuple(km[x] for x in k), "ker1->cm0"),
        1: mapped(
            cohomology(K, 2), xmod_h(cm, 1), lambda k: (0,) * n + tuple(km[x] for x in k), "ker2->cm1"
        ),
    }
