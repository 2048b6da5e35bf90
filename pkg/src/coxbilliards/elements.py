"""Group elements as exact matrices of the geometric representation.

Elements carry both the matrix and its inverse so that the roots w^{-1}a_i
(the data every descent test and toggle needs) are plain column reads.
Words are tuples of generator indices stored in application order: the first
entry acts first, so (i1, ..., iM) represents s_{iM} ... s_{i1}.
"""

from __future__ import annotations

from .system import CoxeterSystem, is_finite
from . import roots as rt

__all__ = [
    "GroupElement",
    "identity",
    "generator",
    "element_of",
    "left_descents",
    "length",
    "reduced_word",
    "is_reduced",
    "inversion_roots",
    "commutation_canonical",
    "long_element",
    "demazure_product",
    "m_of_c",
    "enumerate_group",
    "word_from_json",
    "word_to_json",
]


def _gen_data(sys: CoxeterSystem):
    data = getattr(sys, "_gen_data", None)
    if data is None:
        f = sys.field
        n = sys.n
        ident = tuple(
            tuple(f.one if i == j else f.zero for j in range(n)) for i in range(n)
        )
        twoB = tuple(tuple(b + b for b in row) for row in sys.B)
        data = (ident, twoB)
        sys._gen_data = data
    return data


class GroupElement:
    __slots__ = ("sys", "mat", "inv", "_hash", "_length", "_word")

    def __init__(self, sys: CoxeterSystem, mat, inv):
        self.sys = sys
        self.mat = mat
        self.inv = inv
        self._hash = None
        self._length = None
        self._word = None

    # -- group structure -----------------------------------------------

    def left_mul_gen(self, i: int) -> "GroupElement":
        """s_i * self, updating row i of mat and column i of inv."""
        _, twoB = _gen_data(self.sys)
        n = self.sys.n
        col2B = twoB[i]
        mat = list(self.mat)
        new_row = []
        for c in range(n):
            acc = -self.mat[i][c]  # j = i term: (1 - 2B_ii) = -1
            for j in range(n):
                if j != i:
                    b = col2B[j]
                    if not b.is_zero():
                        acc = acc - b * self.mat[j][c]
            new_row.append(acc)
        mat[i] = tuple(new_row)
        inv = []
        for r in range(n):
            row = list(self.inv[r])
            pivot = row[i]
            for c in range(n):
                if c == i:
                    row[c] = -pivot
                elif not pivot.is_zero():
                    b = col2B[c]
                    if not b.is_zero():
                        row[c] = row[c] - pivot * b
            inv.append(tuple(row))
        return GroupElement(self.sys, tuple(mat), tuple(inv))

    def right_mul_gen(self, i: int) -> "GroupElement":
        """self * s_i."""
        out = GroupElement(self.sys, self.inv, self.mat).left_mul_gen(i)
        return GroupElement(self.sys, out.inv, out.mat)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        n = self.sys.n
        zero = self.sys.field.zero
        mat = _matmul(self.mat, other.mat, n, zero)
        inv = _matmul(other.inv, self.inv, n, zero)
        return GroupElement(self.sys, mat, inv)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.sys, self.inv, self.mat)

    def apply(self, v):
        """Matrix action on a root-space vector."""
        n = self.sys.n
        zero = self.sys.field.zero
        out = []
        for r in range(n):
            row = self.mat[r]
            acc = zero
            for j, vj in enumerate(v):
                if not vj.is_zero():
                    m = row[j]
                    if not m.is_zero():
                        acc = acc + m * vj
            out.append(acc)
        return tuple(out)

    def apply_inverse(self, v):
        n = self.sys.n
        zero = self.sys.field.zero
        out = []
        for r in range(n):
            row = self.inv[r]
            acc = zero
            for j, vj in enumerate(v):
                if not vj.is_zero():
                    m = row[j]
                    if not m.is_zero():
                        acc = acc + m * vj
            out.append(acc)
        return tuple(out)

    def inv_column(self, i: int):
        """The root self^{-1} a_i."""
        return tuple(self.inv[r][i] for r in range(self.sys.n))

    def column(self, i: int):
        """The root self a_i."""
        return tuple(self.mat[r][i] for r in range(self.sys.n))

    def is_identity(self) -> bool:
        ident, _ = _gen_data(self.sys)
        return self.mat == ident

    def __eq__(self, other):
        return isinstance(other, GroupElement) and self.mat == other.mat

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.mat)
        return self._hash

    def __repr__(self):
        try:
            w = reduced_word(self)
        except Exception:
            return "GroupElement(<non-canonical>)"
        if not w:
            return "GroupElement(e)"
        names = [self.sys.labels[i] for i in w]
        return "GroupElement(" + "*".join(f"s{x}" for x in reversed(names)) + ")"


def _matmul(A, B, n, zero):
    out = []
    for r in range(n):
        Ar = A[r]
        row = []
        for c in range(n):
            acc = zero
            for k in range(n):
                a = Ar[k]
                if not a.is_zero():
                    b = B[k][c]
                    if not b.is_zero():
                        acc = acc + a * b
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def identity(sys: CoxeterSystem) -> GroupElement:
    ident, _ = _gen_data(sys)
    return GroupElement(sys, ident, ident)


def generator(sys: CoxeterSystem, i: int) -> GroupElement:
    return identity(sys).left_mul_gen(i)


def element_of(sys: CoxeterSystem, word) -> GroupElement:
    """Product of generators; the first letter of the word acts first."""
    g = identity(sys)
    for i in word:
        g = g.left_mul_gen(i)
    return g


def left_descents(g: GroupElement) -> frozenset:
    out = []
    for i in range(g.sys.n):
        if rt.root_sign(g.inv_column(i)) < 0:
            out.append(i)
    return frozenset(out)


def _strip(g: GroupElement):
    """Greedy smallest-descent stripping; yields letters of a reduced word."""
    collected = []
    cur = g
    while True:
        desc = None
        for i in range(cur.sys.n):
            if rt.root_sign(cur.inv_column(i)) < 0:
                desc = i
                break
        if desc is None:
            break
        collected.append(desc)
        cur = cur.left_mul_gen(desc)
    if not cur.is_identity():
        raise ArithmeticError("descent stripping did not reach the identity")
    return collected


def length(g: GroupElement) -> int:
    if g._length is None:
        reduced_word(g)
    return g._length


def reduced_word(g: GroupElement):
    """Canonical reduced word (application order)."""
    if g._word is None:
        collected = _strip(g)
        g._word = tuple(reversed(collected))
        g._length = len(collected)
    return g._word


def is_reduced(sys: CoxeterSystem, word) -> bool:
    g = identity(sys)
    for i in word:
        if rt.root_sign(g.inv_column(i)) < 0:
            return False
        g = g.left_mul_gen(i)
    return True


def inversion_roots(g: GroupElement) -> frozenset:
    """Positive roots sent negative by g (right-inversion roots)."""
    word = reduced_word(g)
    prod = identity(g.sys)
    out = []
    for i in word:
        out.append(prod.column(i))
        prod = prod.right_mul_gen(i)
    return frozenset(out)


def commutation_canonical(sys: CoxeterSystem, word):
    """Cartier-Foata normal form under commutation moves: repeatedly extract
    (sorted) the letters with no earlier non-commuting letter remaining."""
    word = list(word)

    def commutes(a, b):
        return a != b and sys.matrix[a][b] == 2

    out = []
    while word:
        block_positions = [
            pos
            for pos, x in enumerate(word)
            if all(commutes(x, y) for y in word[:pos])
        ]
        out.extend(sorted(word[p] for p in block_positions))
        for p in reversed(block_positions):
            del word[p]
    return tuple(out)


def long_element(sys: CoxeterSystem) -> GroupElement:
    if not is_finite(sys):
        raise ValueError("long element exists only in finite systems")
    u = identity(sys)
    while True:
        asc = None
        for i in range(sys.n):
            if rt.root_sign(u.inv_column(i)) > 0:
                asc = i
                break
        if asc is None:
            return u
        u = u.left_mul_gen(asc)


def demazure_product(sys: CoxeterSystem, word) -> GroupElement:
    """Evaluate a word with length-increasing letters only."""
    g = identity(sys)
    for i in word:
        if rt.root_sign(g.inv_column(i)) > 0:
            g = g.left_mul_gen(i)
    return g


def m_of_c(sys: CoxeterSystem, c_word) -> int:
    """Least k such that k repetitions of the Coxeter word admit a reduced
    word for the long element as a subword (via the Demazure product)."""
    c_word = tuple(c_word)
    if sorted(c_word) != list(range(sys.n)):
        raise ValueError("c_word must be an ordering of the index set")
    w0 = long_element(sys)
    g = identity(sys)
    cap = 2 * length(w0) + 2
    for k in range(1, cap + 1):
        for i in c_word:
            if rt.root_sign(g.inv_column(i)) > 0:
                g = g.left_mul_gen(i)
        if g == w0:
            return k
    raise ArithmeticError("Demazure powers failed to reach the long element")


def enumerate_group(sys: CoxeterSystem, cap: int | None = None):
    """All elements in breadth-first order from the identity (finite W),
    or the ball of radius cap when a cap is given."""
    if cap is None and not is_finite(sys):
        raise ValueError("cannot enumerate an infinite group without a cap")
    start = identity(sys)
    out = [start]
    index = {start: 0}
    frontier = [start]
    radius = 0
    while frontier:
        if cap is not None and radius >= cap:
            break
        radius += 1
        nxt = []
        for g in frontier:
            for i in range(sys.n):
                h = g.left_mul_gen(i)
                if h not in index:
                    index[h] = len(out)
                    out.append(h)
                    nxt.append(h)
        frontier = nxt
    return out


def word_from_json(doc, sys: CoxeterSystem):
    return tuple(sys.index(x) for x in doc)


def word_to_json(word, sys: CoxeterSystem):
    return [sys.labels[i] for i in word]
