"""Built-in Coxeter systems and replayable counterexample certificates."""

from __future__ import annotations

from .system import CoxeterSystem, INF
from .elements import element_of, identity
from .convex import ConvexSet
from .walkgraph import WalkCertificate
from . import roots as rt

__all__ = [
    "coxeter_system",
    "type_a",
    "dihedral",
    "b3",
    "h3",
    "rank3",
    "right_angled",
    "complete_graph_system",
    "a_tilde",
    "c_tilde",
    "g2_tilde",
    "d4_tilde",
    "f4_tilde",
    "e6_tilde",
    "e8_tilde",
    "b_family",
    "d_family",
    "d4_certificate",
    "f4_certificate",
    "e8_certificate",
    "b_family_certificate",
    "d_family_certificate",
    "builtin_certificates",
    "named_system",
]


def coxeter_system(labels, bonds) -> CoxeterSystem:
    """System from a list of (label_a, label_b, m) bonds; omitted pairs get 2."""
    labels = [str(x) for x in labels]
    n = len(labels)
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    mu = {}
    for item in bonds:
        a, b, v = item[0], item[1], item[2]
        i, j = labels.index(str(a)), labels.index(str(b))
        m[i][j] = m[j][i] = v
        if v == INF and len(item) > 3:
            mu[frozenset((i, j))] = item[3]
    return CoxeterSystem(labels, m, mu)


def type_a(n: int) -> CoxeterSystem:
    return coxeter_system(
        [str(i + 1) for i in range(n)],
        [(str(i), str(i + 1), 3) for i in range(1, n)],
    )


def dihedral(m) -> CoxeterSystem:
    return coxeter_system(["1", "2"], [("1", "2", m)])


def b3() -> CoxeterSystem:
    return coxeter_system(["1", "2", "3"], [("1", "2", 4), ("2", "3", 3)])


def h3() -> CoxeterSystem:
    return coxeter_system(["1", "2", "3"], [("1", "2", 5), ("2", "3", 3)])


def rank3(p, q, r) -> CoxeterSystem:
    """Rank-3 system with m(1,3)=p, m(1,2)=q, m(2,3)=r."""
    return coxeter_system(["1", "2", "3"], [("1", "3", p), ("1", "2", q), ("2", "3", r)])


def right_angled(labels, inf_pairs) -> CoxeterSystem:
    return coxeter_system(labels, [(a, b, INF) for a, b in inf_pairs])


def complete_graph_system(bond_labels) -> CoxeterSystem:
    """Complete Coxeter graph from a dict {(a, b): m} covering all pairs."""
    labels = sorted({str(x) for pair in bond_labels for x in pair})
    return coxeter_system(
        labels, [(a, b, m) for (a, b), m in bond_labels.items()]
    )


def a_tilde(rank: int) -> CoxeterSystem:
    """Affine cycle on `rank` >= 3 vertices (labels 0..rank-1)."""
    if rank < 3:
        raise ValueError("the affine cycle needs at least 3 vertices")
    labs = [str(i) for i in range(rank)]
    bonds = [(labs[i], labs[(i + 1) % rank], 3) for i in range(rank)]
    return coxeter_system(labs, bonds)


def c_tilde(rank: int) -> CoxeterSystem:
    """Affine chain 0..rank with end bonds 4 (rank+1 vertices)."""
    labs = [str(i) for i in range(rank + 1)]
    bonds = [(labs[i], labs[i + 1], 3) for i in range(1, rank - 1)]
    bonds += [(labs[0], labs[1], 4), (labs[rank - 1], labs[rank], 4)]
    return coxeter_system(labs, bonds)


def g2_tilde() -> CoxeterSystem:
    return rank3(2, 3, 6)


def d4_tilde() -> CoxeterSystem:
    """Four-leaf star with center 2 (labels 0..4, all bonds 3)."""
    return coxeter_system(
        ["0", "1", "2", "3", "4"],
        [("0", "2", 3), ("1", "2", 3), ("3", "2", 3), ("4", "2", 3)],
    )


def f4_tilde() -> CoxeterSystem:
    return coxeter_system(
        ["0", "1", "2", "3", "4"],
        [("0", "1", 3), ("1", "2", 3), ("2", "3", 4), ("3", "4", 3)],
    )


def e6_tilde() -> CoxeterSystem:
    return coxeter_system(
        ["0", "1", "2", "3", "4", "5", "6"],
        [("1", "3", 3), ("3", "4", 3), ("4", "5", 3), ("5", "6", 3),
         ("2", "4", 3), ("0", "2", 3)],
    )


def e8_tilde() -> CoxeterSystem:
    return coxeter_system(
        [str(i) for i in range(9)],
        [("1", "3", 3), ("3", "4", 3), ("4", "5", 3), ("5", "6", 3),
         ("6", "7", 3), ("7", "8", 3), ("2", "4", 3), ("0", "8", 3)],
    )


def b_family(n: int, b: int, b2: int) -> CoxeterSystem:
    """Chain 0-1-...-(n-2) with a 4-bond at 0-1 and a fork at n-2 whose
    prongs n-1, n carry bonds b and b2 (n >= 3)."""
    if n < 3 or b < 3 or b2 < 3:
        raise ValueError("need n >= 3 and fork bonds >= 3")
    labs = [str(i) for i in range(n + 1)]
    bonds = [("0", "1", 4)]
    bonds += [(str(i), str(i + 1), 3) for i in range(1, n - 2)]
    bonds += [(str(n - 2), str(n - 1), b), (str(n - 2), str(n), b2)]
    return coxeter_system(labs, bonds)


def d_family(n: int, a: int, a2: int, b: int, b2: int) -> CoxeterSystem:
    """Chain 1-...-(n-2) with legs 0, 0' at vertex 1 (bonds a, a2) and a
    fork at n-2 with prongs n-1, n (bonds b, b2)."""
    if n < 3 or min(a, a2, b, b2) < 3:
        raise ValueError("need n >= 3 and all leg/fork bonds >= 3")
    labs = ["0p", "0"] + [str(i) for i in range(1, n + 1)]
    bonds = [("0", "1", a), ("0p", "1", a2)]
    bonds += [(str(i), str(i + 1), 3) for i in range(1, n - 2)]
    bonds += [(str(n - 2), str(n - 1), b), (str(n - 2), str(n), b2)]
    return coxeter_system(labs, bonds)


# -- words used by the family certificates -------------------------------


def z_word(j: int):
    """Application-order word of (s_j s_{j+1}) ... (s_1 s_2): the double
    staircase fixing the one-line pattern (j+2, j+1, 1, 2, ...)."""
    out = []
    for k in range(1, j + 1):
        out.extend([k + 1, k])
    return tuple(out)


def alternating_word(i: int, j: int, length: int):
    """Application-order word alternating j, i, j, ... of the given length."""
    out = []
    for k in range(length):
        out.append(j if k % 2 == 0 else i)
    return tuple(out)


def descending_word(top: int, bottom: int, skip=()):
    """Application order of the product s_top s_(top-1) ... s_bottom."""
    return tuple(i for i in range(bottom, top + 1) if i not in skip)


# -- certificates ---------------------------------------------------------


def d4_certificate() -> WalkCertificate:
    sys = d4_tilde()
    w = lambda word: element_of(sys, tuple(sys.index(x) for x in word))
    gens = [w("2"), w("020"), w("121"), w("323"), w("424")]
    L = ConvexSet(sys, generators=gens)
    ordering = tuple(sys.index(x) for x in "01234")
    return WalkCertificate(sys, ordering, (), L, 2, name="D4-tilde")


def f4_certificate() -> WalkCertificate:
    sys = f4_tilde()
    idx = sys.index
    a = lambda i: rt.simple_root(sys, idx(i))
    ap = lambda word, i: element_of(sys, tuple(idx(x) for x in word)).apply(a(i))
    beta = ap("2", "3")
    g1 = ap("10", "2")  # s0 s1 a2: s1 acts first
    g2 = ap("31", "2")  # s1 s3 a2: s3 acts first
    g3 = ap("34", "2")  # s4 s3 a2: s3 acts first
    L = ConvexSet(sys, constraints=[(beta, -1), (g1, 1), (g2, 1), (g3, 1)])
    ordering = tuple(idx(x) for x in "43210")
    return WalkCertificate(sys, ordering, (), L, 3, name="F4-tilde")


def e8_certificate() -> WalkCertificate:
    sys = e8_tilde()
    idx = sys.index
    a = lambda i: rt.simple_root(sys, idx(i))
    ap = lambda word, i: element_of(sys, tuple(idx(x) for x in word)).apply(a(i))
    beta = ap("523467", "4")  # s7 s6 s4 s3 s2 s5 a4, rightmost acts first
    cons = [
        (beta, -1),
        (a("0"), 1),
        (a("2"), 1),
        (ap("31", "4"), 1),   # s1 s3 a4
        (ap("65", "7"), 1),   # s5 s6 a7
        (ap("43", "5"), 1),   # s3 s4 a5
        (ap("76", "8"), 1),   # s6 s7 a8
        (ap("54", "6"), 1),   # s4 s5 a6
        (ap("7", "8"), 1),    # s7 a8
    ]
    L = ConvexSet(sys, constraints=cons)
    ordering = tuple(idx(str(i)) for i in range(8, -1, -1))
    return WalkCertificate(sys, ordering, (), L, 3, name="E8-tilde")


def b_family_certificate(n: int, b: int, b2: int) -> WalkCertificate:
    sys = b_family(n, b, b2)
    idx = lambda i: sys.index(str(i))

    def conv(word):
        return tuple(idx(i) for i in word)

    z = z_word(n - 3)
    wo_b = alternating_word(n - 2, n - 1, b)
    wo_b2 = alternating_word(n - 2, n, b2)
    K_words = [(1,), (1,) + z, z + wo_b, z + wo_b2]
    t_star = (0, 1, 0)
    gens = [element_of(sys, conv(w)) for w in K_words]
    gens += [element_of(sys, conv(t_star + w)) for w in K_words]
    L = ConvexSet(sys, generators=gens)
    ordering = conv(tuple(range(n, -1, -1)))  # c = s_0 s_1 ... s_n
    return WalkCertificate(sys, ordering, (), L, 2 * n - 2, name=f"B-family({n},{b},{b2})")


def d_family_certificate(n: int, a: int, a2: int, b: int, b2: int) -> WalkCertificate:
    sys = d_family(n, a, a2, b, b2)

    def conv(word):
        return tuple(sys.index(str(i)) for i in word)

    z = z_word(n - 3)
    wo_b = alternating_word(n - 2, n - 1, b)
    wo_b2 = alternating_word(n - 2, n, b2)
    wo_a = alternating_word("0", 1, a)          # long element of <s_0, s_1>
    wo_a2 = alternating_word("0p", 1, a2)
    K_words = [
        (1,),
        (1,) + z,
        z + wo_b,
        z + wo_b2,
        wo_a,
        wo_a2,
    ]
    gens = [element_of(sys, conv(w)) for w in K_words]
    L = ConvexSet(sys, generators=gens)
    ordering = conv(("0p", "0") + tuple(range(1, n + 1)))  # c = s_n ... s_1 s_0 s_0'
    return WalkCertificate(sys, ordering, (), L, n - 1, name=f"D-family({n},{a},{a2},{b},{b2})")


def builtin_certificates():
    out = [d4_certificate(), f4_certificate(), e8_certificate()]
    for (n, b, b2) in [(3, 3, 3), (4, 4, 3), (5, 4, 4)]:
        out.append(b_family_certificate(n, b, b2))
    for (n, a, a2, b, b2) in [(3, 3, 3, 3, 3), (4, 3, 4, 3, 4), (5, 4, 4, 4, 4)]:
        out.append(d_family_certificate(n, a, a2, b, b2))
    return out


_NAMED = {
    "A2": lambda: type_a(2),
    "A3": lambda: type_a(3),
    "A4": lambda: type_a(4),
    "A5": lambda: type_a(5),
    "A6": lambda: type_a(6),
    "B2": lambda: dihedral(4),
    "B3": b3,
    "H3": h3,
    "I2(5)": lambda: dihedral(5),
    "I2(7)": lambda: dihedral(7),
    "I2(inf)": lambda: dihedral(INF),
    "A2~": lambda: a_tilde(3),
    "C2~": lambda: c_tilde(2),
    "G2~": g2_tilde,
    "D4~": d4_tilde,
    "F4~": f4_tilde,
    "E6~": e6_tilde,
    "E8~": e8_tilde,
}


def named_system(name: str) -> CoxeterSystem:
    try:
        return _NAMED[name]()
    except KeyError:
        raise ValueError(f"unknown system name {name!r}; known: {sorted(_NAMED)}")
