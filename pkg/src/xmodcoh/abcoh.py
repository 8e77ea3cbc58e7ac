"""Cohomology of abelian Γ-modules and hypercohomology of the center complex.

Cochains are normalized inhomogeneous cochains stored as full tuples: a
degree-k cochain has one slot per k-tuple of Γ-elements (mixed radix,
lexicographic), and slots whose arguments contain the identity are fixed at
zero.  The total complex of ``ZF -> ZG`` in degree n is the concatenation
``C^{n+1}(ZF) ⊕ C^n(ZG)`` with differential

    D(a, b) = (-δa, dZ(a) + δb).

Classes are computed by enumeration: cocycles by constraint-pruned
backtracking, coboundaries as the span of images of elementary cochains, and
each class is represented by its lexicographically least cocycle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import budget
from ._memo import memoize
from .errors import BudgetExceeded, NotQuasiAbelian
from .grp import generating_set, quotient_gamma, sub_gamma
from .sets import ClassGroup, CohMap, Joint, SequenceReport, exact_at, injective_pointed


class CochainSpace:
    """Concatenation of normalized cochain blocks ``C^k(Γ, M)``."""

    def __init__(self, gamma_order, blocks):
        self.n = gamma_order
        self.blocks = list(blocks)  # (GammaGroup, degree)
        self.offsets = []
        self.groups = []
        self.free = []
        pos = 0
        for M, k in self.blocks:
            self.offsets.append(pos)
            if k < 0:
                continue
            for args in itertools.product(range(self.n), repeat=k):
                self.groups.append(M.group)
                if all(a != 0 for a in args):
                    self.free.append(pos)
                pos += 1
        self.size = pos

    @property
    def zero(self):
        return (0,) * self.size

    def index(self, block, args):
        i = 0
        for a in args:
            i = i * self.n + a
        return self.offsets[block] + i

    def block_size(self, block):
        k = self.blocks[block][1]
        return 0 if k < 0 else self.n**k

    def split(self, x):
        out = []
        for b in range(len(self.blocks)):
            o = self.offsets[b]
            out.append(tuple(x[o : o + self.block_size(b)]))
        return out

    def add(self, x, y):
        gs = self.groups
        return tuple(gs[i].table[x[i]][y[i]] for i in range(self.size))

    def neg(self, x):
        gs = self.groups
        return tuple(gs[i].inv[x[i]] for i in range(self.size))

    def estimate(self):
        total = 1
        for p in self.free:
            total *= self.groups[p].order
        return total


def _neg_table(G, table):
    return tuple(G.inv[v] for v in table)


def _delta_rows(rows, M, k, n, in_off, out_off, sign):
    """Rows of ±δ: C^k(M) -> C^{k+1}(M), appended into ``rows`` (out_pos -> terms)."""
    G = M.group
    ident = tuple(G.elements)

    def idx(args):
        i = 0
        for a in args:
            i = i * n + a
        return i

    for out in itertools.product(range(1, n), repeat=k + 1):
        terms = []
        sgn_terms = []
        # g1 · a(g2..g_{k+1})
        sgn_terms.append((+1, out[1:], M.act[out[0]]))
        for i in range(1, k + 1):
            merged = out[: i - 1] + (_gamma_mul(M, out[i - 1], out[i]),) + out[i + 1 :]
            if 0 in merged:
                continue
            sgn_terms.append(((-1) ** i, merged, ident))
        sgn_terms.append(((-1) ** (k + 1), out[:k], ident))
        for s, args, tab in sgn_terms:
            if s * sign < 0:
                tab = _neg_table(G, tab)
            terms.append((in_off + idx(args), tab))
        rows.setdefault(out_off + idx(out), []).extend(terms)
    return rows


def _gamma_mul(M, s, t):
    return M.gamma.table[s][t]


def _hom_rows(rows, hom_map, k, n, in_off, out_off):
    for out in itertools.product(range(1, n), repeat=k):
        i = 0
        for a in out:
            i = i * n + a
        rows.setdefault(out_off + i, []).append((in_off + i, tuple(hom_map)))
    return rows


class LinearMap:
    """A sparse additive map between cochain spaces given by rows of hom-terms."""

    def __init__(self, src, dst, rows):
        self.src, self.dst = src, dst
        self.rows = sorted((p, t) for p, t in rows.items() if t)

    def __call__(self, x):
        out = [0] * self.dst.size
        for p, terms in self.rows:
            tab = self.dst.groups[p].table
            s = 0
            for q, h in terms:
                s = tab[s][h[x[q]]]
            out[p] = s
        return tuple(out)

    def kernel(self):
        """All x with self(x) == 0, in lexicographic order, by pruned backtracking.

        The search counts visited nodes against the enumeration budget; the
        naive product of position sizes is reported as the estimate.
        """
        src = self.src
        limit = budget.current()
        free = src.free
        order_of = {p: i for i, p in enumerate(free)}
        trig = [[] for _ in free]
        for p, terms in self.rows:
            last = max(order_of[q] for q, _ in terms)
            trig[last].append((self.dst.groups[p].table, terms))
        x = [0] * src.size
        results = []
        sizes = [src.groups[p].order for p in free]
        visited = [0]

        def rec(i):
            visited[0] += 1
            if visited[0] > limit:
                raise BudgetExceeded(src.estimate(), limit)
            if i == len(free):
                results.append(tuple(x))
                return
            p = free[i]
            checks = trig[i]
            for v in range(sizes[i]):
                x[p] = v
                ok = True
                for tab, terms in checks:
                    s = 0
                    for q, h in terms:
                        s = tab[s][h[x[q]]]
                    if s != 0:
                        ok = False
                        break
                if ok:
                    rec(i + 1)
            x[p] = 0

        rec(0)
        return results

    def image(self):
        """The subgroup of dst spanned by images of elementary cochains."""
        gens = set()
        for p in self.src.free:
            G = self.src.groups[p]
            for g in generating_set(G):
                e = [0] * self.src.size
                e[p] = g
                y = self(e)
                if any(y):
                    gens.add(y)
        gens = sorted(gens)
        limit = budget.current()
        span = {self.dst.zero}
        frontier = [self.dst.zero]
        while frontier:
            nxt = []
            for y in frontier:
                for g in gens:
                    z = self.dst.add(y, g)
                    if z not in span:
                        span.add(z)
                        nxt.append(z)
            if len(span) * max(len(gens), 1) > limit:
                raise BudgetExceeded(len(span) * len(gens), limit)
            frontier = nxt
        return span


def classes_from(label, degree, Zlist, Bset, space):
    """Quotient cocycles by coboundaries, canonical rep = least cocycle of each coset."""
    lookup = {}
    reps = []
    Bl = sorted(Bset)
    for z in Zlist:
        if z in lookup:
            continue
        k = len(reps)
        reps.append(z)
        for b in Bl:
            w = space.add(z, b)
            lookup[w] = k
    if len(lookup) != len(Zlist):
        raise AssertionError(f"{label}: coboundaries not contained in cocycles")
    add = [[lookup[space.add(a, b)] for b in reps] for a in reps]
    return ClassGroup(label, reps, lookup, add, degree)


# -- one-term cohomology ------------------------------------------------------


def cochain_space(A, k):
    return CochainSpace(A.gamma.order, [(A, k)])


def coboundary_map(A, k):
    """δ: C^k(Γ, A) -> C^{k+1}(Γ, A)."""
    n = A.gamma.order
    src, dst = cochain_space(A, k), cochain_space(A, k + 1)
    rows = {}
    if k >= 0:
        _delta_rows(rows, A, k, n, 0, 0, +1)
    return LinearMap(src, dst, rows)


@memoize
def cohomology(A, n):
    """H^n(Γ, A) for an abelian Γ-group A and 0 <= n <= 3."""
    if not 0 <= n <= 3:
        raise ValueError("degree must be in 0..3")
    if not A.group.is_abelian:
        raise ValueError("cohomology needs an abelian module")
    space = cochain_space(A, n)
    Z = coboundary_map(A, n).kernel()
    B = coboundary_map(A, n - 1).image() if n > 0 else {space.zero}
    return classes_from(f"H{n}", n, Z, B, space)


# -- hypercohomology ---------------------------------------------------------


def total_space(K, n):
    return CochainSpace(K.ZF.gamma.order, [(K.ZF, n + 1), (K.ZG, n)])


def total_differential(K, n):
    """D: Tot^n -> Tot^{n+1}, D(a, b) = (-δa, dZ(a) + δb)."""
    g = K.ZF.gamma.order
    src, dst = total_space(K, n), total_space(K, n + 1)
    rows = {}
    if n + 1 >= 0:
        _delta_rows(rows, K.ZF, n + 1, g, src.offsets[0], dst.offsets[0], -1)
        _hom_rows(rows, K.dZ.map, n + 1, g, src.offsets[0], dst.offsets[1])
    if n >= 0:
        _delta_rows(rows, K.ZG, n, g, src.offsets[1], dst.offsets[1], +1)
    return LinearMap(src, dst, rows)


@memoize
def hypercohomology(K, n):
    """H^n of the total complex of the center complex, -1 <= n <= 3."""
    if not -1 <= n <= 3:
        raise ValueError("degree must be in -1..3")
    space = total_space(K, n)
    Z = total_differential(K, n).kernel()
    B = total_differential(K, n - 1).image() if n > -1 else {space.zero}
    return classes_from(f"H{n}_ab", n, Z, B, space)


def split_total(K, n, x):
    """Split a total cochain into its (ZF-part, ZG-part)."""
    a, b = total_space(K, n).split(x)
    return a, b


def join_total(a, b):
    return tuple(a) + tuple(b)


def push_cochain(hom_map, c):
    return tuple(hom_map[v] for v in c)


# -- long exact sequences ----------------------------------------------------


def _center_complex_of(cm):
    from .xmod import center_complex

    return center_complex(cm)


@memoize
def les_long_maps(cm):
    """Maps j^(i), π^(i), ∂_Z^(i) of the sequence induced by 0 -> (0->ZG) -> (ZF->ZG) -> (ZF->0) -> 0."""
    K = _center_complex_of(cm)
    out = {}
    for i in range(-1, 4):
        HZF = cohomology(K.ZF, i) if i >= 0 else None
        HZG = cohomology(K.ZG, i) if i >= 0 else None
        if i >= 0:
            out[("dZ", i)] = CohMap(
                HZF, HZG, [HZG.classify(push_cochain(K.dZ.map, r)) for r in HZF.reps], f"dZ{i}"
            )
        if i <= 2:
            Hab = hypercohomology(K, i)
            nxt = cohomology(K.ZF, i + 1)
            out[("pi", i)] = CohMap(
                Hab,
                nxt,
                [nxt.classify(_neg(K.ZF.group, split_total(K, i, r)[0])) for r in Hab.reps],
                f"pi{i}",
            )
            if i >= 0:
                zero_a = (0,) * (K.ZF.gamma.order ** (i + 1))
                out[("j", i)] = CohMap(
                    HZG, Hab, [Hab.classify(join_total(zero_a, r)) for r in HZG.reps], f"j{i}"
                )
    return out


def _neg(G, c):
    return tuple(G.inv[v] for v in c)


def les_long(cm):
    """Assemble (long) from H^{-1}_ab up to H^3(Z(G)) and check exactness at every joint."""
    m = les_long_maps(cm)
    seq = [m[("pi", -1)]]
    for i in range(0, 3):
        seq += [m[("dZ", i)], m[("j", i)], m[("pi", i)]]
    seq.append(m[("dZ", 3)])
    rep = SequenceReport(maps=seq)
    ok, w = injective_pointed(seq[0])
    rep.joints.append(Joint(seq[0].source.label, ok, w))
    for f, g in zip(seq, seq[1:]):
        ok, w = exact_at(f, g)
        rep.joints.append(Joint(f"{f.label}|{g.label}", ok, w))
    return rep


@dataclass(frozen=True, eq=False)
class KambModules:
    ker: object  # GammaGroup of ker ∂ (materialized)
    ker_to_ZF: tuple
    coker: object  # GammaGroup of coker ∂
    ZG_to_coker: tuple
    coker_lift: tuple  # section coker -> ZG
    ZF_lift: dict  # element of dZ(ZF) -> a preimage in ZF


@memoize
def kamb_modules(cm):
    from .xmod import is_quasi_abelian

    if not is_quasi_abelian(cm):
        raise NotQuasiAbelian("(kamb) needs a quasi-abelian crossed module")
    K = _center_complex_of(cm)
    zf_pos = {e: i for i, e in enumerate(K.incF.map)}
    kerGG, kinc = sub_gamma(cm.F, cm.kernel)
    ker_to_ZF = tuple(zf_pos[e] for e in kinc.map)
    C, proj = quotient_gamma(cm.G, cm.image)
    ZG_to_C = tuple(proj.map[g] for g in K.incG.map)
    lift = [None] * C.group.order
    for z, c in enumerate(ZG_to_C):
        if lift[c] is None:
            lift[c] = z
    if any(v is None for v in lift):
        raise NotQuasiAbelian("Z(G) does not surject onto coker")
    zl = {}
    for a in K.ZF.group.elements:
        zl.setdefault(K.dZ.map[a], a)
    return KambModules(kerGG, ker_to_ZF, C, ZG_to_C, tuple(lift), zl)


@memoize
def les_kamb_maps(cm):
    """κ^(i): H^{i+1}(ker) -> H^i_ab, t_ab^(i): H^i_ab -> H^i(coker), conn^(i): H^i(coker) -> H^{i+2}(ker), c^(i)."""
    K = _center_complex_of(cm)
    km = kamb_modules(cm)
    g = cm.gamma.order
    out = {}
    for i in range(-1, 3):
        Hab = hypercohomology(K, i)
        Hk = cohomology(km.ker, i + 1)
        zero_b = (0,) * (g**i) if i >= 0 else ()
        out[("kappa", i)] = CohMap(
            Hk,
            Hab,
            [Hab.classify(join_total(push_cochain(km.ker_to_ZF, r), zero_b)) for r in Hk.reps],
            f"kappa{i}",
        )
        if i >= 0:
            HC = cohomology(km.coker, i)
            out[("t_ab", i)] = CohMap(
                Hab,
                HC,
                [HC.classify(push_cochain(km.ZG_to_coker, split_total(K, i, r)[1])) for r in Hab.reps],
                f"t_ab{i}",
            )
            HZG = cohomology(K.ZG, i)
            out[("c", i)] = CohMap(
                HZG, HC, [HC.classify(push_cochain(km.ZG_to_coker, r)) for r in HZG.reps], f"c{i}"
            )
        if 0 <= i <= 1:
            HC = cohomology(km.coker, i)
            Hk2 = cohomology(km.ker, i + 2)
            out[("conn", i)] = CohMap(
                HC, Hk2, [Hk2.classify(_kamb_connecting(cm, K, km, i, r)) for r in HC.reps], f"conn{i}"
            )
    return out


def _kamb_connecting(cm, K, km, i, x):
    b = push_cochain(km.coker_lift, x)
    w = coboundary_map(K.ZG, i)(b)
    a = tuple(km.ZF_lift[v] for v in w)
    da = coboundary_map(K.ZF, i + 1)(a)
    inv = {zf: k for k, zf in enumerate(km.ker_to_ZF)}
    return tuple(inv[v] for v in da)


def les_kamb(cm):
    """(kamb) from H^0(ker) to H^2_ab with exactness verdicts, plus the factorization c = t_ab ∘ j."""
    m = les_kamb_maps(cm)
    lm = les_long_maps(cm)
    rep = SequenceReport()
    k_1 = m[("kappa", -1)]
    rep.maps.append(k_1)
    rep.joints.append(Joint("kappa-1_bijective", k_1.is_bijective))
    seq = [m[("kappa", 0)], m[("t_ab", 0)], m[("conn", 0)], m[("kappa", 1)], m[("t_ab", 1)],
           m[("conn", 1)], m[("kappa", 2)], m[("t_ab", 2)]]
    rep.maps.extend(seq)
    ok, w = injective_pointed(seq[0])
    rep.joints.append(Joint(seq[0].source.label, ok, w))
    for f, g in zip(seq, seq[1:]):
        ok, w = exact_at(f, g)
        rep.joints.append(Joint(f"{f.label}|{g.label}", ok, w))
    for i in range(0, 3):
        lhs = m[("t_ab", i)].compose(lm[("j", i)])
        rep.extras.append(Joint(f"kamb2_{i}", lhs.images == m[("c", i)].images))
    return rep
