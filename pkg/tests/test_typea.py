from itertools import permutations

import pytest

from coxbilliards import catalog, typea
from coxbilliards.billiards import toggle
from coxbilliards.convex import ConvexSet
from coxbilliards.elements import element_of, identity


def test_poset_validation():
    with pytest.raises(ValueError):
        typea.PosetOnLabels(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        typea.PosetOnLabels(3, [(1, 1)])
    P = typea.PosetOnLabels(3, [(1, 2), (2, 3)])
    assert P.less(1, 3)  # transitive closure


def test_linear_extensions():
    chain = typea.PosetOnLabels(3, [(1, 2), (2, 3)])
    assert chain.linear_extensions() == [(1, 2, 3)]
    anti = typea.PosetOnLabels(3, [])
    assert len(anti.linear_extensions()) == 6


def test_bk_toggle():
    P = typea.PosetOnLabels(3, [(1, 2)])
    u = (2, 1, 3)  # u(1)=2, u(2)=1: positions of 1,2 are 2,1: 2 <_P 1? no: swap
    assert typea.typeA_bk(P, 1, u) == (1, 2, 3)
    assert typea.typeA_bk(P, 1, (1, 2, 3)) == (1, 2, 3)  # fixed


def test_poset_from_convex_s4_example():
    sys = catalog.type_a(3)
    words = [(), (0,), (2,), (0, 2), (2, 0, 1)]
    L = ConvexSet(sys, generators=[element_of(sys, w) for w in words])
    P = typea.poset_from_convex(sys, L)
    assert P.relations == frozenset({(2, 3), (1, 3), (2, 4)})


def test_convex_from_poset_extremes():
    sys = catalog.type_a(2)
    anti = typea.PosetOnLabels(3, [])
    L = typea.convex_from_poset(sys, anti)
    assert len(L.generators) == 6  # all of the group
    chain = typea.PosetOnLabels(3, [(1, 2), (2, 3)])
    L = typea.convex_from_poset(sys, chain)
    assert list(L.generators) == [identity(sys)]


def test_requires_type_a():
    with pytest.raises(ValueError):
        typea.poset_from_convex(
            catalog.b3(), ConvexSet(catalog.b3(), generators=[identity(catalog.b3())])
        )


def test_perm_element_round_trip():
    sys = catalog.type_a(3)
    for perm in permutations(range(1, 5)):
        g = typea.perm_to_element(sys, perm)
        assert typea.element_to_perm(sys, g) == perm
    # multiplication is compatible with composition of value maps
    u = typea.perm_to_element(sys, (2, 1, 4, 3))
    v = typea.perm_to_element(sys, (1, 3, 2, 4))
    prod = u * v
    composed = tuple((2, 1, 4, 3)[(1, 3, 2, 4)[k] - 1] for k in range(4))
    assert typea.element_to_perm(sys, prod) == composed


def test_dictionary_matches_bk_exhaustively_rank2():
    n = 2
    sys = typea.type_a_system(n)
    for P in typea.all_posets(n + 1):
        L = typea.convex_from_poset(sys, P)
        for perm in permutations(range(1, n + 2)):
            u = typea.perm_to_element(sys, perm)
            for i in range(1, n + 1):
                got = typea.element_to_perm(sys, toggle(sys, L, i - 1, u))
                assert got == typea.typeA_bk(P, i, perm)


def test_sorting_operators_small():
    P = typea.PosetOnLabels(4, [(1, 3), (2, 3), (2, 4)])
    n = P.size - 1
    target = set(P.linear_extensions())
    perms = set(permutations(range(1, 5)))
    img = perms
    for _ in range(n):
        img = {typea.typeA_pro(P, p) for p in img}
    assert img == target
    assert {typea.typeA_ev(P, p) for p in perms} == target
    img = perms
    for _ in range((P.size + 1) // 2):
        img = {typea.typeA_gyr(P, p) for p in img}
    assert img == target


def test_all_posets_counts():
    assert len(typea.all_posets(2)) == 3
    assert len(typea.all_posets(3)) == 19
    assert len(typea.all_posets(4)) == 219
