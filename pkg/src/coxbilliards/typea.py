"""Type-A specialization: posets on labels, BK toggles on permutations,
and the dictionary between permutations and root-theoretic elements."""

from __future__ import annotations

from itertools import permutations

from .system import CoxeterSystem
from .elements import GroupElement, identity
from .convex import ConvexSet, in_RL, YES
from . import roots as rt

__all__ = [
    "type_a_system",
    "PosetOnLabels",
    "all_posets",
    "random_poset",
    "typeA_bk",
    "typeA_pro",
    "typeA_ev",
    "typeA_gyr",
    "perm_to_element",
    "element_to_perm",
    "poset_from_convex",
    "convex_from_poset",
]


def type_a_system(n: int) -> CoxeterSystem:
    """The rank-n path with all bonds 3 (symmetric group on n+1 letters)."""
    m = [[1 if i == j else (3 if abs(i - j) == 1 else 2) for j in range(n)] for i in range(n)]
    return CoxeterSystem([str(i + 1) for i in range(n)], m)


class PosetOnLabels:
    """A strict partial order on the ground set {1, ..., n+1}."""

    def __init__(self, size: int, relations):
        self.size = size
        rel = set()
        for a, b in relations:
            if not (1 <= a <= size and 1 <= b <= size):
                raise ValueError("relation endpoint out of range")
            if a == b:
                raise ValueError("strict order cannot be reflexive")
            rel.add((a, b))
        changed = True
        while changed:
            changed = False
            for a, b in list(rel):
                for c, d in list(rel):
                    if b == c and (a, d) not in rel:
                        if a == d:
                            raise ValueError("relations contain a cycle")
                        rel.add((a, d))
                        changed = True
        self.relations = frozenset(rel)

    def less(self, a: int, b: int) -> bool:
        return (a, b) in self.relations

    def linear_extensions(self):
        """All labelings u (as tuples u(1..n+1)) with a <_P b => u(a) < u(b)."""
        out = []
        for perm in permutations(range(1, self.size + 1)):
            if all(perm[a - 1] < perm[b - 1] for a, b in self.relations):
                out.append(tuple(perm))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PosetOnLabels)
            and self.size == other.size
            and self.relations == other.relations
        )

    def __hash__(self):
        return hash((self.size, self.relations))

    def __repr__(self):
        return f"PosetOnLabels({self.size}, {sorted(self.relations)})"


def all_posets(size: int):
    """Every strict partial order on {1..size} (labeled), by brute force."""
    pairs = [(a, b) for a in range(1, size + 1) for b in range(1, size + 1) if a != b]
    out = set()

    def rec(k, rel):
        if k == len(pairs):
            try:
                out.add(PosetOnLabels(size, rel))
            except ValueError:
                pass
            return
        rec(k + 1, rel)
        rec(k + 1, rel + [pairs[k]])

    if size <= 3:
        rec(0, [])
        return sorted(out, key=lambda p: sorted(p.relations))
    # For larger sizes, enumerate transitively-closed antisymmetric relations
    # directly over the subsets of covering pairs.
    from itertools import combinations

    for r in range(len(pairs) + 1):
        for combo in combinations(pairs, r):
            rel = set(combo)
            ok = True
            closure = set(rel)
            changed = True
            while changed and ok:
                changed = False
                for a, b in list(closure):
                    if (b, a) in closure:
                        ok = False
                        break
                    for c, d in list(closure):
                        if b == c and (a, d) not in closure:
                            closure.add((a, d))
                            changed = True
            if ok and closure == rel:
                out.add(PosetOnLabels(size, rel))
    return sorted(out, key=lambda p: sorted(p.relations))


def random_poset(size: int, rng) -> PosetOnLabels:
    """A random strict order: transitive closure of a random relation on a
    random linear order (guarantees acyclicity)."""
    order = list(range(1, size + 1))
    rng.shuffle(order)
    rel = []
    for i in range(size):
        for j in range(i + 1, size):
            if rng.random() < 0.4:
                rel.append((order[i], order[j]))
    return PosetOnLabels(size, rel)


# -- BK toggles on permutations ----------------------------------------
#
# Permutations are tuples u with u[k-1] = u(k); u labels poset element k
# with u(k).


def _swap_values(perm, i):
    out = list(perm)
    for k, v in enumerate(out):
        if v == i:
            out[k] = i + 1
        elif v == i + 1:
            out[k] = i
    return tuple(out)


def typeA_bk(P: PosetOnLabels, i: int, perm):
    """Toggle at value i: fix the labeling if the positions of i and i+1 are
    comparable in the right order, else swap the two values."""
    pos_i = perm.index(i) + 1
    pos_i1 = perm.index(i + 1) + 1
    if P.less(pos_i, pos_i1):
        return perm
    return _swap_values(perm, i)


def typeA_pro(P: PosetOnLabels, perm):
    for i in range(1, P.size):
        perm = typeA_bk(P, i, perm)
    return perm


def typeA_ev(P: PosetOnLabels, perm):
    n = P.size - 1
    for top in range(n, 0, -1):
        for i in range(1, top + 1):
            perm = typeA_bk(P, i, perm)
    return perm


def typeA_gyr(P: PosetOnLabels, perm):
    n = P.size - 1
    for i in range(1, n + 1, 2):
        perm = typeA_bk(P, i, perm)
    for i in range(2, n + 1, 2):
        perm = typeA_bk(P, i, perm)
    return perm


# -- the dictionary -----------------------------------------------------


def _e_diff_root(sys: CoxeterSystem, a: int, b: int):
    """e_a - e_b in simple-root coordinates (1-based labels, a != b)."""
    f = sys.field
    coords = [f.zero] * sys.n
    if a < b:
        for t in range(a, b):
            coords[t - 1] = f.one
    else:
        for t in range(b, a):
            coords[t - 1] = -f.one
    return tuple(coords)


def perm_to_element(sys: CoxeterSystem, perm) -> GroupElement:
    """The group element whose root action matches w(e_a - e_b) = e_{w(a)} - e_{w(b)}."""
    n = sys.n
    mat_cols = []
    inv_cols = []
    inv_perm = [0] * (n + 2)
    for k, v in enumerate(perm):
        inv_perm[v] = k + 1
    for k in range(1, n + 1):
        mat_cols.append(_e_diff_root(sys, perm[k - 1], perm[k]))
        inv_cols.append(_e_diff_root(sys, inv_perm[k], inv_perm[k + 1]))
    mat = tuple(tuple(mat_cols[c][r] for c in range(n)) for r in range(n))
    inv = tuple(tuple(inv_cols[c][r] for c in range(n)) for r in range(n))
    return GroupElement(sys, mat, inv)


def element_to_perm(sys: CoxeterSystem, g: GroupElement):
    """Recover the permutation from pairwise comparisons w(i) < w(j)."""
    n = sys.n
    size = n + 1
    wins = [0] * (size + 1)
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            if i == j:
                continue
            v = g.apply(_e_diff_root(sys, i, j))
            if rt.root_sign(v) < 0:
                wins[i] += 1  # w(i) > w(j)
    return tuple(1 + wins[i] for i in range(1, size + 1))


def poset_from_convex(sys: CoxeterSystem, L: ConvexSet) -> PosetOnLabels:
    """The order with a < b iff e_a - e_b is a mirror root of L."""
    _require_type_a(sys)
    size = sys.n + 1
    rel = []
    for a in range(1, size + 1):
        for b in range(1, size + 1):
            if a != b and in_RL(sys, L, _e_diff_root(sys, a, b)) == YES:
                rel.append((a, b))
    return PosetOnLabels(size, rel)


def convex_from_poset(sys: CoxeterSystem, P: PosetOnLabels) -> ConvexSet:
    """Hull of the linear extensions of P, as group elements."""
    _require_type_a(sys)
    if P.size != sys.n + 1:
        raise ValueError("poset size does not match the rank")
    gens = [perm_to_element(sys, perm) for perm in P.linear_extensions()]
    return ConvexSet(sys, generators=gens)


def _require_type_a(sys: CoxeterSystem):
    for i in range(sys.n):
        for j in range(i + 1, sys.n):
            want = 3 if j == i + 1 else 2
            if sys.matrix[i][j] != want:
                raise ValueError("operation requires the type-A path system")
