"""Built-in crossed modules and exhaustive discovery of small ones."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import budget
from .grp import (
    GammaGroup,
    GroupHom,
    automorphisms,
    center,
    homomorphisms,
    inner_automorphism,
    quotient,
    trivial_action,
    trivial_group,
)
from .smallgroups import cyclic, direct_product, quaternion8, small_groups, symmetric3
from .xmod import (
    CrossedModule,
    abelian_crossed_module,
    conjugation_module,
    identity_module,
    is_quasi_abelian,
    validate,
)


@dataclass(frozen=True, eq=False)
class Instance:
    name: str
    cm: CrossedModule
    note: str
    quasi_abelian: bool
    injective: bool
    surjective: bool

    @property
    def gamma(self):
        return self.cm.gamma

    def flags(self):
        return (self.quasi_abelian, self.injective, self.surjective)

    def recompute_flags(self):
        return (bool(is_quasi_abelian(self.cm)), self.cm.is_injective, self.cm.is_surjective)


def _instance(name, cm, note):
    cm = CrossedModule(cm.F, cm.G, cm.boundary, cm.gact, name)
    return Instance(name, cm, note, bool(is_quasi_abelian(cm)), cm.is_injective, cm.is_surjective)


def _perm_action(gamma, group, perm):
    """Γ = C2 acting on ``group`` through the involution ``perm``."""
    return GammaGroup(gamma, group, (tuple(group.elements), tuple(perm)))


def _builtin():
    C1, C2, C3, C4 = trivial_group(), cyclic(2), cyclic(3), cyclic(4)
    S3, Q8 = symmetric3(), quaternion8()
    out = []

    t = trivial_action(C1, C1)
    out.append(_instance("trivial", abelian_crossed_module(t, t, GroupHom(C1, C1, (0,))), "all groups trivial"))

    to_c2 = GroupHom(C4, C2, (0, 1, 0, 1))
    out.append(
        _instance(
            "z4_to_z2",
            abelian_crossed_module(trivial_action(C2, C4), trivial_action(C2, C2), to_c2),
            "Z/4 -> Z/2 reduction, Γ = C2 trivial",
        )
    )
    out.append(
        _instance(
            "z4_to_z2_inv",
            abelian_crossed_module(_perm_action(C2, C4, (0, 3, 2, 1)), trivial_action(C2, C2), to_c2),
            "Z/4 -> Z/2 reduction, Γ = C2 inverting Z/4",
        )
    )
    out.append(
        _instance(
            "zero_to_z2",
            abelian_crossed_module(trivial_action(C2, C1), trivial_action(C2, C2), GroupHom(C1, C2, (0,))),
            "0 -> Z/2, Γ = C2 trivial",
        )
    )
    out.append(
        _instance(
            "z2_to_zero",
            abelian_crossed_module(trivial_action(C2, C2), trivial_action(C2, C1), GroupHom(C2, C1, (0, 0))),
            "Z/2 -> 0, Γ = C2 trivial",
        )
    )
    out.append(_instance("id_s3", identity_module(trivial_action(C2, S3)), "identity on S3, Γ = C2 trivial"))
    out.append(_instance("id_q8", identity_module(trivial_action(C2, Q8)), "identity on Q8, Γ = C2 trivial"))

    S3C2 = direct_product(S3, C2, "S3xC2")
    s3_in = [2 * x for x in S3.elements]  # (x, 0) has index 2x
    out.append(
        _instance(
            "s3_in_s3xc2",
            conjugation_module(trivial_action(C2, S3C2), s3_in),
            "S3 normal in S3 x C2 by conjugation, Γ = C2 trivial",
        )
    )
    tau = 2 * 1  # (transposition, 0)
    out.append(
        _instance(
            "s3_in_s3xc2_conj",
            conjugation_module(_perm_action(C2, S3C2, inner_automorphism(S3C2, tau)), s3_in),
            "S3 normal in S3 x C2, Γ = C2 acting by conjugation with a transposition",
        )
    )
    out.append(_instance("q8_to_inn", _q8_to_inn(C2, Q8), "Q8 -> Q8/Z(Q8) with lifted conjugation (not quasi-abelian)"))
    out.append(
        _instance(
            "one_to_c3",
            abelian_crossed_module(trivial_action(C3, C1), trivial_action(C3, C3), GroupHom(C1, C3, (0,))),
            "1 -> C3, Γ = C3 trivial",
        )
    )
    return out


def _q8_to_inn(C2, Q8):
    Zq, _ = center(Q8)
    V, proj = quotient(Q8, Zq)
    lift = [None] * V.order
    for g in Q8.elements:
        if lift[proj.map[g]] is None:
            lift[proj.map[g]] = g
    gact = tuple(inner_automorphism(Q8, lift[v]) for v in V.elements)
    return CrossedModule(trivial_action(C2, Q8), trivial_action(C2, V), proj, gact)


_BUILTIN = None


def builtin():
    """The fixed corpus of named instances."""
    global _BUILTIN
    if _BUILTIN is None:
        _BUILTIN = _builtin()
    return list(_BUILTIN)


def by_name(name):
    for inst in builtin():
        if inst.name == name:
            return inst
    raise KeyError(name)


# -- discovery ---------------------------------------------------------------

MAX_BOUNDS = (8, 8, 4)


def _actions(gamma, group):
    """All Γ-actions on ``group`` as tuples of automorphism permutations."""
    A, perms = automorphisms(group)
    return [tuple(perms[i] for i in h) for h in homomorphisms(gamma, A)]


def fingerprint(inst):
    """Isomorphism invariants of an instance; equal instances have equal fingerprints."""
    from .nacoh import h0, h1, xmod_h

    cm = inst.cm
    F, G = cm.F, cm.G
    Q, _ = quotient(G.group, cm.image)
    fixF = sum(1 for f in F.group.elements if all(a[f] == f for a in F.act))
    fixG = sum(1 for g in G.group.elements if all(a[g] == g for a in G.act))
    trivial_gact = sum(1 for row in cm.gact if row == tuple(F.group.elements))
    return (
        cm.gamma.order_profile,
        F.group.order_profile,
        G.group.order_profile,
        len(cm.kernel),
        len(cm.image),
        Q.order_profile,
        len(center(F.group)[0]),
        len(center(G.group)[0]),
        fixF,
        fixG,
        trivial_gact,
        is_quasi_abelian(cm).as_tuple(),
        tuple(len(xmod_h(cm, i)) for i in (-1, 0, 1)),
        (len(h0(F)), len(h1(F)), len(h0(G)), len(h1(G))),
    )


def candidate_count(max_f, max_g, max_gamma):
    total = 0
    groups = small_groups()
    for Gam in (g for g in groups if g.order <= max_gamma):
        for F in (g for g in groups if g.order <= max_f):
            for G in (g for g in groups if g.order <= max_g):
                total += len(automorphisms(F)[1]) ** len(_gens(Gam)) * len(automorphisms(G)[1]) ** len(
                    _gens(Gam)
                ) * G.order ** len(_gens(F)) * len(automorphisms(F)[1]) ** len(_gens(G))
    return total


def _gens(G):
    from .grp import generating_set

    return generating_set(G)


def discover(max_f=4, max_g=4, max_gamma=2):
    """Enumerate valid crossed modules up to the given orders, deduplicated by fingerprint.

    Ordering is deterministic: by (Γ, F, G) in small-group table order, then
    by the enumeration order of actions and boundaries.
    """
    if max_f > MAX_BOUNDS[0] or max_g > MAX_BOUNDS[1] or max_gamma > MAX_BOUNDS[2]:
        raise ValueError(f"bounds exceed the ceiling {MAX_BOUNDS}")
    budget.check(candidate_count(max_f, max_g, max_gamma))
    groups = small_groups()
    seen = set()
    out = []
    for Gam in (g for g in groups if g.order <= max_gamma):
        for Fg in (g for g in groups if g.order <= max_f):
            F_acts = _actions(Gam, Fg)
            _, autF = automorphisms(Fg)
            for Gg in (g for g in groups if g.order <= max_g):
                G_acts = _actions(Gam, Gg)
                bounds = homomorphisms(Fg, Gg)
                AF, _ = automorphisms(Fg)
                g_actions = [tuple(autF[i] for i in h) for h in homomorphisms(Gg, AF)]
                for fa, ga, d, gact in itertools.product(F_acts, G_acts, bounds, g_actions):
                    if not _quick_ok(Fg, Gg, fa, ga, d, gact):
                        continue
                    cm = CrossedModule(GammaGroup(Gam, Fg, fa), GammaGroup(Gam, Gg, ga), GroupHom(Fg, Gg, d), gact)
                    if not validate(cm).ok:
                        continue
                    name = f"{Gam.name}:{Fg.name}->{Gg.name}#{len(out)}"
                    inst = _instance(name, cm, "discovered")
                    fp = fingerprint(inst)
                    if fp in seen:
                        continue
                    seen.add(fp)
                    out.append(inst)
    return out


def _quick_ok(F, G, fa, ga, d, gact):
    """Cheap necessary conditions before full validation: equivariance, CM1 and CM2."""
    for a_f, a_g in zip(fa, ga):
        if any(d[a_f[f]] != a_g[d[f]] for f in F.elements):
            return False
    for f in F.elements:
        row = gact[d[f]]
        for f2 in F.elements:
            if row[f2] != F.conj(f, f2):
                return False
    for g in G.elements:
        row = gact[g]
        if any(d[row[f]] != G.conj(g, d[f]) for f in F.elements):
            return False
    return True
