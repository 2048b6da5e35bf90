import json
import random

import pytest

from coxbilliards import catalog, roots as rt
from coxbilliards.convex import (
    NO,
    UNKNOWN,
    YES,
    ConvexSet,
    Effort,
    convex_from_json,
    convex_to_json,
    hull_expand,
    in_RL,
    separators,
    stratum_of,
    tau_equivalent,
    transmitting_roots,
)
from coxbilliards.elements import element_of, enumerate_group, identity, length
from coxbilliards.billiards import FiniteToggleTable


def s4_example():
    """The 5-element convex set in the rank-3 symmetric group."""
    sys = catalog.type_a(3)
    words = [(), (0,), (2,), (0, 2), (2, 0, 1)]  # 1, s1, s3, s1s3, s2s1s3
    return sys, [element_of(sys, w) for w in words]


def _e_diff(sys, a, b):
    from coxbilliards.typea import _e_diff_root

    return _e_diff_root(sys, a, b)


def test_hull_expand_examples():
    a2 = catalog.type_a(2)
    one = identity(a2)
    assert hull_expand(a2, [one]) == frozenset({one})
    sys, gens = s4_example()
    assert hull_expand(sys, gens) == frozenset(gens)  # already convex
    got = hull_expand(a2, [one, element_of(a2, (1, 0))])  # {1, s1s2}
    assert got == frozenset(
        {one, element_of(a2, (1,)), element_of(a2, (1, 0))}
    )


def test_in_RL_hull_examples():
    a2 = catalog.type_a(2)
    L = ConvexSet(a2, generators=[identity(a2)])
    assert in_RL(a2, L, rt.simple_root(a2, 0)) == YES
    sys, gens = s4_example()
    L = ConvexSet(sys, generators=gens)
    # mirrors: e2-e3, e1-e3, e2-e4; windows: e1-e2, e3-e4, e1-e4
    assert in_RL(sys, L, _e_diff(sys, 2, 3)) == YES
    assert in_RL(sys, L, _e_diff(sys, 1, 3)) == YES
    assert in_RL(sys, L, _e_diff(sys, 2, 4)) == YES
    assert in_RL(sys, L, _e_diff(sys, 1, 2)) == NO
    assert in_RL(sys, L, _e_diff(sys, 3, 4)) == NO
    assert in_RL(sys, L, _e_diff(sys, 1, 4)) == NO


def test_in_RL_halfspaces_and_unknown():
    at2 = catalog.a_tilde(3)
    a0 = rt.simple_root(at2, 0)
    L = ConvexSet(at2, constraints=[(a0, 1)], witness=identity(at2))
    assert in_RL(at2, L, a0, Effort()) == YES
    assert in_RL(at2, L, rt.negate(a0), Effort()) == NO
    # with all searching disabled, a true mirror root that dominates the
    # constraint (member of R(L) but not certifiable) is honestly unknown
    starved = Effort(search_radius=0, universe_depth=0, beam_width=1)
    L2 = ConvexSet(at2, constraints=[(a0, 1)], witness=identity(at2))
    f = at2.field
    dominating = (f.from_rational(2), f.one, f.one)  # a0 + imaginary root
    assert in_RL(at2, L2, dominating, starved) == UNKNOWN


def test_halfspace_witness_validation_and_search():
    a2 = catalog.type_a(2)
    a0 = rt.simple_root(a2, 0)
    with pytest.raises(ValueError):
        ConvexSet(a2, constraints=[(a0, -1)], witness=identity(a2))
    L = ConvexSet(a2, constraints=[(a0, -1)])
    w = L.any_member(Effort())
    assert rt.root_sign(w.apply(a0)) < 0
    # an empty set fails loudly
    empty = ConvexSet(
        a2, constraints=[(a0, 1), (rt.negate(a0), 1)]
    )
    with pytest.raises(ValueError):
        empty.any_member(Effort(search_radius=4))


def test_separators_examples():
    sys, gens = s4_example()
    L = ConvexSet(sys, generators=gens)
    for g in gens:
        sep = separators(sys, L, g)
        assert sep.complete and not sep.roots  # members have empty separator
    s2 = element_of(sys, (1,))
    sep = separators(sys, L, s2)
    assert rt.simple_root(sys, 1) in sep.roots  # alpha_2 separates s_2
    # the D4~ start element lies outside the hull: nonempty separator
    cert = catalog.d4_certificate()
    sep = separators(cert.sys, cert.convex, identity(cert.sys))
    assert sep.complete and sep.roots


def test_sep_membership_equivalence_and_bound():
    rng = random.Random(17)
    sys = catalog.b3()
    for _ in range(25):
        gens = [
            element_of(sys, tuple(rng.randrange(3) for _ in range(rng.randint(0, 4))))
            for _ in range(rng.randint(1, 3))
        ]
        L = ConvexSet(sys, generators=gens)
        hull = hull_expand(sys, gens)
        u = element_of(sys, tuple(rng.randrange(3) for _ in range(5)))
        sep = separators(sys, L, u)
        assert (not sep.roots) == (u in hull)
        bound = min(length(u * g.inverse()) for g in gens)
        assert len(sep.roots) <= bound


def test_stratum_examples():
    a1 = catalog.type_a(1)
    L = ConvexSet(a1, generators=[identity(a1)])
    st = stratum_of(a1, L, element_of(a1, (0,)))
    assert st.members == frozenset({element_of(a1, (0,))}) and st.complete

    a2 = catalog.type_a(2)
    L = ConvexSet(a2, generators=[identity(a2)])
    W = enumerate_group(a2)
    strata = {}
    for u in W:
        st = stratum_of(a2, L, u)
        strata[st.separator] = st.members
    assert sum(len(v) for v in strata.values()) == 6  # they partition the group
    # the empty-separator stratum is the set itself
    st = stratum_of(a2, L, identity(a2))
    assert st.separator == frozenset() and st.members == frozenset({identity(a2)})


def test_stratum_cap_reporting():
    at2 = catalog.a_tilde(3)
    L = ConvexSet(at2, generators=[identity(at2)])
    st = stratum_of(at2, L, element_of(at2, (0,)), cap=2)
    if not st.complete:
        assert len(st.members) >= 2


def test_transmitting_roots():
    a2 = catalog.type_a(2)
    L = ConvexSet(a2, generators=[identity(a2)])
    st = stratum_of(a2, L, element_of(a2, (0,)))
    trans = transmitting_roots(a2, L, st)
    # -s_0 a_0 = a_0 is a separator of s_0 and transmits
    assert rt.simple_root(a2, 0) in st.separator
    assert rt.simple_root(a2, 0) in trans
    st0 = stratum_of(a2, L, identity(a2))
    assert transmitting_roots(a2, L, st0) == frozenset()
    # every complete proper stratum of a random hull transmits
    cert = catalog.d4_certificate()
    st = stratum_of(cert.sys, cert.convex, identity(cert.sys))
    assert st.complete and transmitting_roots(cert.sys, cert.convex, st)


def test_tau_equivalent():
    a2 = catalog.type_a(2)
    L = ConvexSet(a2, generators=[identity(a2)])
    s0 = {element_of(a2, (0,))}
    s1 = {element_of(a2, (1,))}
    assert tau_equivalent(a2, L, s0, s0)
    # label preservation matters: the two singletons toggle with different
    # labels, so they are inequivalent as labeled digraphs
    assert not tau_equivalent(a2, L, s0, s1)
    assert not tau_equivalent(a2, L, s0, {identity(a2)})
    # right translation by t* is a label-preserving isomorphism whenever the
    # set satisfies L = L t* (the fork-family hulls do)
    cert = catalog.b_family_certificate(3, 3, 3)
    sys = cert.sys
    t_star = element_of(sys, tuple(sys.index(x) for x in "010"))
    one = identity(sys)
    assert tau_equivalent(sys, cert.convex, {one}, {t_star})
    assert tau_equivalent(
        sys, cert.convex, {one, element_of(sys, (sys.index("3"),))},
        {t_star, element_of(sys, (sys.index("3"),)) * t_star},
    )


def test_R_of_hull_equals_R_of_generators():
    rng = random.Random(23)
    for name in ("A2", "A3", "B2"):
        sys = catalog.named_system(name)
        table = FiniteToggleTable(sys)
        roots, signs = table.root_table()
        for _ in range(20):
            gens = [
                element_of(sys, tuple(rng.randrange(sys.n) for _ in range(3)))
                for _ in range(rng.randint(1, 4))
            ]
            L = ConvexSet(sys, generators=gens)
            hull = hull_expand(sys, gens)
            for beta in roots:
                via_gens = in_RL(sys, L, beta)
                brute = YES if all(
                    signs[table.index[w]][roots.index(beta)] > 0 for w in hull
                ) else NO
                assert via_gens == brute


def test_convex_json_round_trip():
    sys, gens = s4_example()
    L = ConvexSet(sys, generators=gens)
    doc = json.loads(json.dumps(convex_to_json(L)))
    again = convex_from_json(doc, sys)
    assert frozenset(again.generators) == frozenset(gens)

    cert = catalog.f4_certificate()
    doc = json.loads(json.dumps(convex_to_json(cert.convex)))
    again = convex_from_json(doc, cert.sys)
    assert again.constraints == cert.convex.constraints
