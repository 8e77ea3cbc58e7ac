"""Finite groups as Cayley tables, homomorphisms, subgroups and Γ-actions.

Elements of every group are the integers ``0..order-1`` and ``0`` is always
the identity.  Subgroups are passed around as sorted element lists; when a
standalone group is needed it is materialized with an explicit inclusion or
projection homomorphism.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from ._memo import memoize
from .errors import (
    NotAGroup,
    NotAHomomorphism,
    NotAnAction,
    NotASubgroup,
    NotNormal,
    OrderBoundExceeded,
)

Perm = tuple  # tuple[int, ...]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    order: int
    table: tuple
    inv: tuple
    name: str = ""

    def mul(self, a, b):
        return self.table[a][b]

    def inverse(self, a):
        return self.inv[a]

    def prod(self, *xs):
        out = 0
        for x in xs:
            out = self.table[out][x]
        return out

    def conj(self, g, x):
        """g x g^-1"""
        t = self.table
        return t[t[g][x]][self.inv[g]]

    @property
    def elements(self):
        return range(self.order)

    @cached_property
    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def order_profile(self):
        return tuple(sorted(self.element_order(a) for a in self.elements))

    def __repr__(self):
        label = self.name or "group"
        return f"<FiniteGroup {label} order={self.order}>"


def build_group(order, table, name=""):
    """Validate a Cayley table and return a :class:`FiniteGroup`.

    Raises :class:`NotAGroup` naming the first violated axiom, checked in the
    order identity, associativity, inverses, Latin square.
    """
    n = int(order)
    if n < 1:
        raise NotAGroup("shape", "order must be positive")
    rows = [tuple(int(x) for x in row) for row in table]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise NotAGroup("shape", f"table is not {n}x{n}")
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            if not 0 <= x < n:
                raise NotAGroup("shape", (i, j, x))
    for j in range(n):
        if rows[0][j] != j:
            raise NotAGroup("identity", (0, j))
        if rows[j][0] != j:
            raise NotAGroup("identity", (j, 0))
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            rij = rows[ri[j]]
            rj = rows[j]
            for k in range(n):
                if rij[k] != ri[rj[k]]:
                    raise NotAGroup("associativity", (i, j, k))
    inv = []
    for i in range(n):
        cands = [j for j in range(n) if rows[i][j] == 0 and rows[j][i] == 0]
        if not cands:
            raise NotAGroup("inverses", (i,))
        inv.append(cands[0])
    full = set(range(n))
    for i in range(n):
        if set(rows[i]) != full:
            raise NotAGroup("latin-square", ("row", i))
        if {rows[j][i] for j in range(n)} != full:
            raise NotAGroup("latin-square", ("column", i))
    return FiniteGroup(n, tuple(rows), tuple(inv), name)


def group_from_elements(elements, mul, name=""):
    """Cayley table of a concrete group; ``elements[0]`` must be the identity."""
    elements = list(elements)
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    return build_group(len(elements), table, name)


def group_from_permutations(generators, name=""):
    """Permutation group generated by ``generators``, elements sorted lexicographically."""
    degree = len(generators[0])
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = tuple(p[g[i]] for i in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    elements = sorted(seen)
    return group_from_elements(
        elements, lambda a, b: tuple(a[b[i]] for i in range(degree)), name
    )


def trivial_group():
    return FiniteGroup(1, ((0,),), (0,), "C1")


# -- homomorphisms -----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    map: tuple

    def __call__(self, x):
        return self.map[x]

    def validate(self):
        if len(self.map) != self.source.order:
            raise NotAHomomorphism("map has wrong length")
        if self.map[0] != 0:
            raise NotAHomomorphism("identity not preserved")
        s, t, m = self.source.table, self.target.table, self.map
        for a in self.source.elements:
            for b in self.source.elements:
                if m[s[a][b]] != t[m[a]][m[b]]:
                    raise NotAHomomorphism(f"map[{a}*{b}] != map[{a}]*map[{b}]")
        return self

    def compose(self, other):
        """self ∘ other"""
        return GroupHom(other.source, self.target, tuple(self.map[x] for x in other.map))

    @cached_property
    def kernel(self):
        return [x for x in self.source.elements if self.map[x] == 0]

    @cached_property
    def image(self):
        return sorted(set(self.map))

    @property
    def is_injective(self):
        return len(self.kernel) == 1

    @property
    def is_surjective(self):
        return len(self.image) == self.target.order


def identity_hom(G):
    return GroupHom(G, G, tuple(G.elements))


def closure(G, gens):
    """Sorted element list of the subgroup generated by ``gens``."""
    seen = {0}
    frontier = [0]
    gens = [g for g in gens if g != 0]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.table[x][g]
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


def is_subgroup(G, elems):
    s = set(elems)
    if 0 not in s:
        return False
    return all(G.table[a][G.inv[b]] in s for a in s for b in s)


def is_normal(G, elems):
    s = set(elems)
    return all(G.conj(g, x) in s for g in G.elements for x in s)


def subgroup(G, elems):
    """Materialize a subgroup; returns (H, inclusion H -> G).

    The i-th element of H is the i-th smallest element of ``elems``.
    """
    elems = sorted(set(elems))
    if not is_subgroup(G, elems):
        raise NotASubgroup(f"{elems} is not a subgroup")
    pos = {e: i for i, e in enumerate(elems)}
    table = tuple(tuple(pos[G.table[a][b]] for b in elems) for a in elems)
    inv = tuple(pos[G.inv[a]] for a in elems)
    H = FiniteGroup(len(elems), table, inv)
    return H, GroupHom(H, G, tuple(elems))


def center(G):
    """Center of G as (sorted element list, inclusion hom)."""
    t = G.table
    elems = [z for z in G.elements if all(t[z][g] == t[g][z] for g in G.elements)]
    _, incl = subgroup(G, elems)
    return elems, incl


def centralizer(G, elems):
    t = G.table
    return [g for g in G.elements if all(t[g][x] == t[x][g] for x in elems)]


def quotient(G, N):
    """G/N as (Q, projection).  Cosets are ordered by their least element."""
    N = sorted(set(N))
    if not is_subgroup(G, N):
        raise NotASubgroup(f"{N} is not a subgroup")
    if not is_normal(G, N):
        raise NotNormal(f"{N} is not normal")
    coset_of = {}
    cosets = []
    for g in G.elements:
        if g in coset_of:
            continue
        k = len(cosets)
        cs = sorted(G.table[g][n] for n in N)
        cosets.append(cs)
        for x in cs:
            coset_of[x] = k
    reps = [c[0] for c in cosets]
    table = tuple(tuple(coset_of[G.table[a][b]] for b in reps) for a in reps)
    inv = tuple(coset_of[G.inv[a]] for a in reps)
    Q = FiniteGroup(len(reps), table, inv)
    return Q, GroupHom(G, Q, tuple(coset_of[g] for g in G.elements))


def generating_set(G):
    """Greedy generating set: repeatedly add the smallest element not yet generated."""
    gens = []
    current = {0}
    for g in G.elements:
        if g not in current:
            gens.append(g)
            current = set(closure(G, gens))
            if len(current) == G.order:
                break
    return gens


def extend_hom(G, H, gens, images):
    """Extend ``gens[i] -> images[i]`` to a homomorphism G -> H, or return None."""
    m = [None] * G.order
    m[0] = 0
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, im in zip(gens, images):
                y = G.table[x][g]
                v = H.table[m[x]][im]
                if m[y] is None:
                    m[y] = v
                    nxt.append(y)
                elif m[y] != v:
                    return None
        frontier = nxt
    if any(v is None for v in m):
        return None
    # closure over generators only proves well-definedness on words; recheck fully
    s, t = G.table, H.table
    for a in G.elements:
        ma = m[a]
        for b in G.elements:
            if m[s[a][b]] != t[ma][m[b]]:
                return None
    return tuple(m)


def homomorphisms(G, H):
    """All homomorphisms G -> H as image tuples, in lexicographic order of generator images."""
    gens = generating_set(G)
    out = []
    # image of a generator must have order dividing the generator's order
    cands = [
        [h for h in H.elements if G.element_order(g) % H.element_order(h) == 0]
        for g in gens
    ]
    for images in itertools.product(*cands):
        m = extend_hom(G, H, gens, images)
        if m is not None:
            out.append(m)
    return out


def is_automorphism(G, perm):
    if sorted(perm) != list(G.elements):
        return False
    t = G.table
    return all(perm[t[a][b]] == t[perm[a]][perm[b]] for a in G.elements for b in G.elements)


def compose_perms(p, q):
    """(p ∘ q)(x) = p(q(x))"""
    return tuple(p[x] for x in q)


def invert_perm(p):
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


DEFAULT_AUT_BOUND = 16


@memoize
def automorphisms(G, bound=DEFAULT_AUT_BOUND):
    """Aut(G) as (permutation group on G's elements, list of automorphism perms).

    Backtracks over images of a greedy generating set; the identity
    automorphism is element 0 of the returned group.
    """
    if G.order > bound:
        raise OrderBoundExceeded(f"order {G.order} exceeds automorphism bound {bound}")
    gens = generating_set(G)
    perms = []

    def search(k, images, used):
        if k == len(gens):
            m = extend_hom(G, G, gens, images)
            if m is not None and len(set(m)) == G.order:
                perms.append(m)
            return
        g = gens[k]
        og = G.element_order(g)
        for h in G.elements:
            if h in used or G.element_order(h) != og:
                continue
            # prune: partial assignment must extend to an injective hom on the generated subgroup
            partial = extend_hom(
                subgroup(G, closure(G, gens[: k + 1]))[0],
                G,
                *_relabel_gens(G, gens[: k + 1], images + [h]),
            )
            if partial is None or len(set(partial)) != len(partial):
                continue
            search(k + 1, images + [h], used | {h})

    search(0, [], frozenset())
    perms.sort()
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[compose_perms(p, q)] for q in perms) for p in perms)
    inv = tuple(index[invert_perm(p)] for p in perms)
    return FiniteGroup(len(perms), table, inv, f"Aut({G.name})" if G.name else ""), perms


def _relabel_gens(G, gens, images):
    elems = closure(G, gens)
    pos = {e: i for i, e in enumerate(elems)}
    return [pos[g] for g in gens], list(images)


def inn_hom(G):
    """The canonical projection G -> Inn(G) = G/Z(G)."""
    Z, _ = center(G)
    _, proj = quotient(G, Z)
    return proj


def inner_automorphism(G, g):
    return tuple(G.conj(g, x) for x in G.elements)


def fixed_points(GG, elems=None):
    elems = GG.group.elements if elems is None else elems
    return [x for x in elems if all(a[x] == x for a in GG.act)]


# -- Γ-groups ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class GammaGroup:
    """A finite group with a left action of the operator group Γ by automorphisms."""

    gamma: FiniteGroup
    group: FiniteGroup
    act: tuple  # act[σ] is a permutation of group elements

    def __call__(self, sigma, x):
        return self.act[sigma][x]

    def validate(self):
        G, Gam = self.group, self.gamma
        if len(self.act) != Gam.order:
            raise NotAnAction("need one permutation per element of Γ")
        for s, p in enumerate(self.act):
            if len(p) != G.order or not is_automorphism(G, p):
                raise NotAnAction(f"act[{s}] is not an automorphism")
        if self.act[0] != tuple(G.elements):
            raise NotAnAction("identity of Γ does not act trivially")
        for s in Gam.elements:
            for t in Gam.elements:
                if self.act[Gam.table[s][t]] != compose_perms(self.act[s], self.act[t]):
                    raise NotAnAction(f"act[{s}*{t}] != act[{s}] ∘ act[{t}]")
        return self

    @property
    def is_trivial_action(self):
        ident = tuple(self.group.elements)
        return all(p == ident for p in self.act)


@dataclass(frozen=True, eq=False)
class GammaHom:
    source: GammaGroup
    target: GammaGroup
    hom: GroupHom

    def __call__(self, x):
        return self.hom.map[x]

    def validate(self):
        self.hom.validate()
        m = self.hom.map
        for s in self.source.gamma.elements:
            a, b = self.source.act[s], self.target.act[s]
            for x in self.source.group.elements:
                if m[a[x]] != b[m[x]]:
                    raise NotAHomomorphism(f"not Γ-equivariant at σ={s}, x={x}")
        return self


def trivial_action(gamma, group):
    ident = tuple(group.elements)
    return GammaGroup(gamma, group, tuple(ident for _ in gamma.elements))


def sub_gamma(GG, elems):
    """Restrict a Γ-action to a Γ-stable subgroup; returns (GammaGroup, inclusion)."""
    H, incl = subgroup(GG.group, elems)
    pos = {e: i for i, e in enumerate(incl.map)}
    try:
        act = tuple(tuple(pos[a[e]] for e in incl.map) for a in GG.act)
    except KeyError:
        raise NotAnAction("subgroup is not Γ-stable") from None
    return GammaGroup(GG.gamma, H, act), incl


def quotient_gamma(GG, N):
    """Induced Γ-action on G/N for a Γ-stable normal N; returns (GammaGroup, projection)."""
    Q, proj = quotient(GG.group, N)
    reps = [None] * Q.order
    for g in GG.group.elements:
        if reps[proj.map[g]] is None:
            reps[proj.map[g]] = g
    act = tuple(tuple(proj.map[a[r]] for r in reps) for a in GG.act)
    return GammaGroup(GG.gamma, Q, act), proj


def center_gamma(GG):
    Z, _ = center(GG.group)
    return sub_gamma(GG, Z)


def inner_gamma(GG):
    """Inn(G) = G/Z(G) with its induced Γ-action, and the projection b_G."""
    Z, _ = center(GG.group)
    return quotient_gamma(GG, Z)


def coset_lifts(proj):
    """Smallest preimage of each element of the target of a surjection."""
    lifts = [None] * proj.target.order
    for g in proj.source.elements:
        q = proj.map[g]
        if lifts[q] is None:
            lifts[q] = g
    return tuple(lifts)


def subgroups(G):
    """All subgroups of a small group, as sorted element lists."""
    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        nxt = []
        for H in frontier:
            for g in G.elements:
                if g in H:
                    continue
                K = tuple(closure(G, list(H) + [g]))
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(found, key=lambda s: (len(s), s))


def restrict_operators(GG, sub):
    """Restrict the Γ-action to a subgroup Γ' ≤ Γ (materialized, elements in sorted order)."""
    Gp, incl = subgroup(GG.gamma, sub)
    return GammaGroup(Gp, GG.group, tuple(GG.act[s] for s in incl.map)), incl
