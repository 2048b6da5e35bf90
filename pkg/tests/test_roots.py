import random
from fractions import Fraction

import pytest

from coxbilliards import catalog, roots as rt
from coxbilliards.elements import element_of, enumerate_group, long_element, length
from coxbilliards.system import INF, parabolic


def test_apply_simple_examples():
    a2 = catalog.type_a(2)
    a0 = rt.simple_root(a2, 0)
    assert rt.apply_simple(a2, 0, a0) == rt.negate(a0)
    img = rt.apply_simple(a2, 0, rt.simple_root(a2, 1))
    assert img == (a2.field.one, a2.field.one)  # a1 + a2
    g2 = catalog.g2_tilde()  # m(2,3) = 6 bond
    i2, i3 = g2.index("2"), g2.index("3")
    img = rt.apply_simple(g2, i2, rt.simple_root(g2, i3))
    s3 = g2.field.two_cos_pi_over(6)
    want = [g2.field.zero] * 3
    want[i2], want[i3] = s3, g2.field.one
    assert img == tuple(want)  # sqrt(3) a2 + a3


def test_apply_simple_involutive_and_form_invariant():
    rng = random.Random(7)
    sys = catalog.b3()
    roots = sorted(rt.enumerate_roots(sys, 4), key=lambda v: tuple(x.to_str() for x in v))
    for _ in range(100):
        b, g = rng.choice(roots), rng.choice(roots)
        i = rng.randrange(sys.n)
        assert rt.apply_simple(sys, i, rt.apply_simple(sys, i, b)) == b
        lhs = rt.form(sys, rt.apply_simple(sys, i, b), rt.apply_simple(sys, i, g))
        assert (lhs - rt.form(sys, b, g)).is_zero()


def test_is_positive():
    a2 = catalog.type_a(2)
    assert rt.is_positive(rt.simple_root(a2, 0))
    assert not rt.is_positive(rt.negate(rt.simple_root(a2, 0)))
    assert rt.is_positive(rt.apply_simple(a2, 0, rt.simple_root(a2, 1)))
    with pytest.raises(ValueError):
        rt.root_sign((a2.field.one, -a2.field.one))


def test_enumerate_roots():
    a2 = catalog.type_a(2)
    assert len(rt.enumerate_roots(a2, 6)) == 6
    assert rt.enumerate_roots(a2, 0) == frozenset(
        rt.simple_root(a2, i) for i in range(2)
    )
    i25 = catalog.dihedral(5)
    assert len(rt.enumerate_roots(i25, 12)) == 10  # 2m roots
    for v in rt.enumerate_roots(catalog.b3(), 5):
        rt.root_sign(v)  # uniformly signed


def test_rank2_roots():
    i25 = catalog.dihedral(5)
    assert rt.rank2_root(i25, 0, 1, 0) == rt.simple_root(i25, 0)
    assert rt.rank2_root(i25, 0, 1, 4) == rt.simple_root(i25, 1)
    assert rt.rank2_root(i25, 0, 1, 3) == rt.rank2_root(i25, 0, 1, 13)  # period 2m
    a2 = catalog.type_a(2)
    assert rt.rank2_root(a2, 0, 1, 1) == (a2.field.one, a2.field.one)
    with pytest.raises(ValueError):
        rt.rank2_root(catalog.dihedral(INF), 0, 1, 1)


def test_small_roots_right_angled():
    sys = catalog.right_angled(["1", "2", "3"], [("1", "2"), ("2", "3")])
    assert rt.small_roots(sys) == frozenset(rt.simple_root(sys, i) for i in range(3))


def _dominates(sys, W, b, g):
    """H_b+ contains H_g+ (brute force over a finite group)."""
    return all(
        rt.root_sign(w.apply(b)) > 0
        for w in W
        if rt.root_sign(w.apply(g)) > 0
    )


def test_small_roots_finite_group_is_all_positive_roots():
    for sys in (catalog.type_a(2), catalog.dihedral(4), catalog.type_a(3)):
        W = enumerate_group(sys)
        pos = [v for v in rt.enumerate_roots(sys, length(long_element(sys))) if rt.is_positive(v)]
        # brute-force oracle: no positive root properly dominates another
        for b in pos:
            for g in pos:
                if b != g:
                    assert not _dominates(sys, W, b, g)
        assert rt.small_roots(sys) == frozenset(pos)


def test_small_roots_g2_tilde_contains_stated_roots():
    g2 = catalog.g2_tilde()
    f = g2.field
    s3 = f.two_cos_pi_over(6)
    sigma = rt.small_roots(g2)
    for want in [
        (f.zero, s3, f.one),
        (s3, s3, f.one),
        (s3, s3, f.from_rational(2)),
        (f.zero, s3, f.from_rational(2)),
    ]:
        assert want in sigma


def test_small_roots_of_parabolic():
    from coxbilliards.scalars import lift

    sys = catalog.b3()
    sigma = rt.small_roots(sys)
    for J in ([0, 1], [1, 2], [0, 2], [0], [0, 1, 2]):
        sub = parabolic(sys, J)
        # the subsystem re-derives its own (smaller) field; lift for comparison
        sub_sigma = {
            tuple(lift(x, sys.field) for x in v) for v in rt.small_roots(sub)
        }
        restricted = set()
        for v in sigma:
            if all(v[k].is_zero() for k in range(sys.n) if k not in J):
                restricted.add(tuple(v[k] for k in J))
        assert sub_sigma == restricted


def test_nonneg_combination():
    a2 = catalog.type_a(2)
    one, zero = a2.field.one, a2.field.zero
    b1, b2 = rt.simple_root(a2, 0), rt.simple_root(a2, 1)
    assert rt.nonneg_combination(b1, b1, b2) == (one, zero)
    assert rt.nonneg_combination((one, one), b1, b2) == (one, one)
    assert rt.nonneg_combination(rt.negate(b1), b1, b2) is None
    # parallel generators
    got = rt.nonneg_combination(b1, b1, rt.negate(b1))
    assert got is not None and (got[0] - got[1] - 1).is_zero()
    assert rt.nonneg_combination(rt.negate(b1), b1, b1) is None


def test_close_root_set():
    a2 = catalog.type_a(2)
    univ = rt.enumerate_roots(a2, 6)
    b1, b2 = rt.simple_root(a2, 0), rt.simple_root(a2, 1)
    closed = rt.close_root_set({b1, b2}, univ)
    assert closed == frozenset({b1, b2, (a2.field.one, a2.field.one)})
    assert rt.close_root_set(closed, univ) == closed
    assert rt.close_root_set({b1}, univ) == frozenset({b1})
    with pytest.raises(ValueError):
        rt.close_root_set({(a2.field.one, a2.field.one + 1)}, univ)


def test_rank2_description_of_small_roots():
    # on dihedral-closure systems the two-coordinate small roots are exactly
    # the interior dihedral roots plus the simples
    for sys in (catalog.rank3(3, 4, 5), catalog.rank3(2, 3, 7)):
        sigma = rt.small_roots(sys)
        two_support = {
            v for v in sigma if sum(1 for x in v if not x.is_zero()) <= 2
        }
        expected = {rt.simple_root(sys, i) for i in range(sys.n)}
        for i in range(sys.n):
            for j in range(sys.n):
                if i != j and sys.matrix[i][j] != INF:
                    for k in range(1, sys.matrix[i][j] - 1):
                        expected.add(rt.rank2_root(sys, i, j, k))
        assert two_support == expected
