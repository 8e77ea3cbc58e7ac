"""All groups of order at most 8, up to isomorphism, as Cayley tables."""

from functools import lru_cache

from .grp import (
    build_group,
    group_from_elements,
    group_from_permutations,
    trivial_group,
)


def cyclic(n):
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return build_group(n, table, f"C{n}")


def direct_product(A, B, name=""):
    """Element (a, b) has index a*|B| + b."""
    nb = B.order
    elems = [(a, b) for a in A.elements for b in B.elements]
    table = [[A.table[a][c] * nb + B.table[b][d] for (c, d) in elems] for (a, b) in elems]
    return build_group(len(elems), table, name or f"{A.name}x{B.name}")


def symmetric3():
    return group_from_permutations([(1, 0, 2), (1, 2, 0)], "S3")


def dihedral8():
    # symmetries of a square on vertices 0..3
    return group_from_permutations([(1, 2, 3, 0), (0, 3, 2, 1)], "D4")


def quaternion8():
    """Q8 with elements ordered 1, -1, i, -i, j, -j, k, -k."""

    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    units = []
    for axis in range(4):
        for sign in (1, -1):
            v = [0, 0, 0, 0]
            v[axis] = sign
            units.append(tuple(v))
    return group_from_elements(units, qmul, "Q8")


@lru_cache(maxsize=None)
def small_groups(max_order=8):
    """Representatives of every isomorphism class of groups of order <= max_order."""
    C2 = cyclic(2)
    groups = [
        trivial_group(),
        C2,
        cyclic(3),
        cyclic(4),
        direct_product(C2, C2, "V4"),
        cyclic(5),
        cyclic(6),
        symmetric3(),
        cyclic(7),
        cyclic(8),
        direct_product(cyclic(4), C2, "C4xC2"),
        direct_product(direct_product(C2, C2), C2, "C2^3"),
        dihedral8(),
        quaternion8(),
    ]
    return tuple(g for g in groups if g.order <= max_order)


def by_name(name):
    for g in small_groups():
        if g.name == name:
            return g
    raise KeyError(name)
