"""Coxeter systems: bond matrices, bilinear forms, orientations, folding."""

from __future__ import annotations

import json
import math
from fractions import Fraction
from math import gcd

from .scalars import CosField, Scalar, lift

INF = math.inf

__all__ = [
    "INF",
    "CoxeterSystem",
    "bilinear_form",
    "is_finite",
    "parabolic",
    "AcyclicOrientation",
    "ao_of_coxeter_word",
    "flip_equivalent",
    "all_acyclic_orientations",
    "FoldingMap",
    "fold",
    "system_from_json",
    "system_to_json",
]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


class CoxeterSystem:
    """A Coxeter system given by its labeled graph.

    Indices used throughout the API are positions 0..n-1 into `labels`.
    Off-diagonal bond labels are integers >= 2 or INF; each INF bond carries
    a weight mu >= 1 (default 1) entering the bilinear form as -mu.
    """

    def __init__(self, labels, matrix, mu=None, field_N: int | None = None):
        self.labels = tuple(str(x) for x in labels)
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate labels")
        m = [[INF if row[j] == INF else int(row[j]) for j in range(n)] for row in matrix]
        if len(m) != n or any(len(row) != n for row in m):
            raise ValueError("bond matrix must be square of rank len(labels)")
        for i in range(n):
            if m[i][i] != 1:
                raise ValueError("diagonal bond entries must be 1")
            for j in range(i + 1, n):
                if m[i][j] != m[j][i]:
                    raise ValueError("bond matrix must be symmetric")
                if m[i][j] != INF and m[i][j] < 2:
                    raise ValueError("off-diagonal bond entries must be >= 2")
        self.matrix = tuple(tuple(row) for row in m)
        self.n = n

        N = 1
        for i in range(n):
            for j in range(i + 1, n):
                if m[i][j] != INF and m[i][j] >= 3:
                    N = _lcm(N, m[i][j])
        if field_N is not None:
            if field_N % N != 0:
                raise ValueError(f"field_N={field_N} does not cover the labels (need multiple of {N})")
            N = field_N
        self.field = CosField(N)

        self.mu: dict[frozenset, Scalar] = {}
        mu = mu or {}
        seen = set()
        for key, val in mu.items():
            pair = frozenset(key)
            if len(pair) != 2:
                raise ValueError(f"mu key {key} is not an unordered pair")
            i, j = sorted(pair)
            if self.matrix[i][j] != INF:
                raise ValueError(f"mu given for finite bond {key}")
            if isinstance(val, Scalar):
                val = lift(val, self.field)
            else:
                val = self.field.from_rational(Fraction(val))
            if val < 1:
                raise ValueError(f"mu value for {key} must be >= 1")
            self.mu[pair] = val
            seen.add(pair)
        one = self.field.one
        for i in range(n):
            for j in range(i + 1, n):
                if self.matrix[i][j] == INF and frozenset((i, j)) not in seen:
                    self.mu[frozenset((i, j))] = one

        self._B = None
        self._finite = None

    # -- basic views ----------------------------------------------------

    def index(self, label) -> int:
        return self.labels.index(str(label))

    def graph_edges(self):
        """Coxeter-graph edges: unordered index pairs with bond >= 3."""
        out = []
        for i in range(self.n):
            for j in range(i + 1, self.n):
                mij = self.matrix[i][j]
                if mij == INF or mij >= 3:
                    out.append((i, j))
        return tuple(out)

    def bond(self, i: int, j: int):
        return self.matrix[i][j]

    @property
    def B(self):
        if self._B is None:
            self._B = bilinear_form(self)
        return self._B

    def B_entry(self, i: int, j: int) -> Scalar:
        return self.B[i][j]

    def key(self):
        return (self.labels, self.matrix, tuple(sorted((tuple(sorted(p)), v.coeffs) for p, v in self.mu.items())))

    def __eq__(self, other):
        return isinstance(other, CoxeterSystem) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"CoxeterSystem(labels={self.labels})"


def bilinear_form(sys: CoxeterSystem):
    """The symmetric form with B(a_i,a_i)=1, B(a_i,a_j)=-cos(pi/m(i,j)),
    and -mu on infinite bonds."""
    f = sys.field
    n = sys.n
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(f.one)
            else:
                mij = sys.matrix[i][j]
                if mij == INF:
                    row.append(-sys.mu[frozenset((i, j))])
                elif mij == 2:
                    row.append(f.zero)
                else:
                    row.append(-f.cos_pi_over(mij))
        rows.append(tuple(row))
    return tuple(rows)


def is_finite(sys: CoxeterSystem) -> bool:
    """Finiteness test: all leading principal minors of B are positive."""
    if sys._finite is None:
        B = [list(row) for row in sys.B]
        n = sys.n
        finite = True
        det = sys.field.one
        # Fraction-free is unnecessary; field division is exact.
        for k in range(n):
            piv = B[k][k]
            if piv.sign() <= 0:
                finite = False
                break
            det = det * piv
            if det.sign() <= 0:
                finite = False
                break
            for r in range(k + 1, n):
                c = B[r][k] / piv
                if not c.is_zero():
                    for col in range(k, n):
                        B[r][col] = B[r][col] - c * B[k][col]
        sys._finite = finite
    return sys._finite


def parabolic(sys: CoxeterSystem, J) -> CoxeterSystem:
    """The standard parabolic subsystem on the index subset J (positions)."""
    J = sorted(set(J))
    if any(j < 0 or j >= sys.n for j in J):
        raise ValueError("parabolic subset out of range")
    labels = [sys.labels[j] for j in J]
    matrix = [[sys.matrix[a][b] for b in J] for a in J]
    mu = {}
    for pair, val in sys.mu.items():
        i, j = pair
        if i in J and j in J:
            mu[frozenset((J.index(i), J.index(j)))] = val
    return CoxeterSystem(labels, matrix, mu)


# -- acyclic orientations and flips -----------------------------------


class AcyclicOrientation:
    """An acyclic orientation of the Coxeter graph, as directed index pairs."""

    def __init__(self, edges, directed):
        self.edges = frozenset(frozenset(e) for e in edges)
        self.directed = frozenset(tuple(e) for e in directed)
        if {frozenset(e) for e in self.directed} != self.edges:
            raise ValueError("directed edges do not match the underlying graph")
        if self._has_cycle():
            raise ValueError("orientation is not acyclic")

    def _has_cycle(self) -> bool:
        succ: dict[int, list[int]] = {}
        verts = set()
        for a, b in self.directed:
            succ.setdefault(a, []).append(b)
            verts.update((a, b))
        state: dict[int, int] = {}

        def visit(v):
            state[v] = 1
            for w in succ.get(v, ()):
                s = state.get(w, 0)
                if s == 1 or (s == 0 and visit(w)):
                    return True
            state[v] = 2
            return False

        return any(state.get(v, 0) == 0 and visit(v) for v in verts)

    def vertices(self):
        out = set()
        for e in self.edges:
            out.update(e)
        return out

    def is_source(self, v) -> bool:
        return not any(b == v for _, b in self.directed) and any(
            a == v for a, _ in self.directed
        )

    def is_sink(self, v) -> bool:
        return not any(a == v for a, _ in self.directed) and any(
            b == v for _, b in self.directed
        )

    def flip(self, v) -> "AcyclicOrientation":
        if not (self.is_source(v) or self.is_sink(v)):
            raise ValueError(f"vertex {v} is neither a source nor a sink")
        rd = {(b, a) if v in (a, b) else (a, b) for a, b in self.directed}
        return AcyclicOrientation(self.edges, rd)

    def __eq__(self, other):
        return (
            isinstance(other, AcyclicOrientation)
            and self.edges == other.edges
            and self.directed == other.directed
        )

    def __hash__(self):
        return hash((self.edges, self.directed))

    def __repr__(self):
        return f"AcyclicOrientation({sorted(self.directed)})"


def ao_of_coxeter_word(sys: CoxeterSystem, word) -> AcyclicOrientation:
    """Orientation induced by a Coxeter word (each index exactly once,
    application order).  Edge i -> i' iff i is applied before i'."""
    word = tuple(word)
    if sorted(word) != list(range(sys.n)):
        raise ValueError("word is not an ordering of the index set")
    pos = {i: k for k, i in enumerate(word)}
    directed = []
    for i, j in sys.graph_edges():
        directed.append((i, j) if pos[i] < pos[j] else (j, i))
    return AcyclicOrientation([frozenset(e) for e in sys.graph_edges()], directed)


def flip_equivalent(o1: AcyclicOrientation, o2: AcyclicOrientation) -> bool:
    """Whether o2 is reachable from o1 by source/sink flips."""
    if o1.edges != o2.edges:
        raise ValueError("orientations live on different graphs")
    seen = {o1}
    frontier = [o1]
    while frontier:
        nxt = []
        for o in frontier:
            for v in o.vertices():
                if o.is_source(v) or o.is_sink(v):
                    f = o.flip(v)
                    if f not in seen:
                        if f == o2:
                            return True
                        seen.add(f)
                        nxt.append(f)
        frontier = nxt
    return o2 in seen


def all_acyclic_orientations(sys: CoxeterSystem):
    edges = list(sys.graph_edges())
    out = []

    def rec(k, directed):
        if k == len(edges):
            try:
                out.append(AcyclicOrientation([frozenset(e) for e in edges], directed))
            except ValueError:
                pass
            return
        i, j = edges[k]
        rec(k + 1, directed + [(i, j)])
        rec(k + 1, directed + [(j, i)])

    rec(0, [])
    return out


# -- folding ----------------------------------------------------------


class FoldingMap:
    """A folding of a Coxeter system along a graph automorphism."""

    def __init__(self, source, sigma, orbits, folded, form_values):
        self.source = source
        self.sigma = tuple(sigma)
        self.orbits = tuple(tuple(o) for o in orbits)
        self.folded = folded
        self.form_values = form_values  # folded B entries in a common field

    def iota_word(self, word):
        """Expand a folded word (positions in the folded system) into the
        source system, replacing each letter by its orbit's members."""
        out = []
        for o in word:
            out.extend(self.orbits[o])
        return tuple(out)

    def __repr__(self):
        return f"FoldingMap(orbits={self.orbits} -> {self.folded.labels})"


def _orbit_list(sigma) -> list[tuple[int, ...]]:
    n = len(sigma)
    seen = [False] * n
    orbits = []
    for i in range(n):
        if not seen[i]:
            orb = []
            j = i
            while not seen[j]:
                seen[j] = True
                orb.append(j)
                j = sigma[j]
            orbits.append(tuple(sorted(orb)))
    orbits.sort()
    return orbits


def _sqrt_in_some_field(value: Scalar, hint_Ns) -> Scalar:
    """Exact square root of a nonnegative field element, searched in a small
    family of candidate cyclotomic real fields.  Raises if none contains it."""
    if value.sign() < 0:
        raise ValueError("square root of a negative element")
    if value.is_rational():
        q = value.as_fraction()
        num, den = q.numerator, q.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return CosField(1).from_rational(Fraction(rn, rd))
    import sympy

    base = value.field.N
    expr = sympy.Integer(0)
    gen = 2 * sympy.cos(sympy.pi / base)
    for k, c in enumerate(value.coeffs):
        if c:
            expr += sympy.Rational(c.numerator, c.denominator) * gen**k
    target = sympy.sqrt(sympy.nsimplify(expr))
    for mult in (1, 4, 3, 12, 8, 5, 20, 24, 7, 28):
        M = _lcm(base, mult) if mult > 1 else base
        for cand_N in dict.fromkeys(h for h in list(hint_Ns) + [M]):
            N = _lcm(base, _lcm(cand_N, mult))
            K = sympy.QQ.algebraic_field(2 * sympy.cos(sympy.pi / N))
            try:
                elem = K.from_sympy(target)
            except Exception:
                continue
            coeffs = list(reversed(elem.to_list()))
            f = CosField(N)
            out = f.from_coeffs([Fraction(c.numerator, c.denominator) for c in coeffs])
            if (out * out - lift(value, f)).is_zero() and out.sign() >= 0:
                return out
    raise ValueError(
        "folded weight is not representable in the supported cyclotomic fields"
    )


def fold(sys: CoxeterSystem, sigma) -> FoldingMap:
    """Fold along a graph automorphism with independent orbits.

    Folded bond labels follow the degree/label case table; the folded form
    entry for each orbit pair is -sqrt of the product of row sums of B, and
    is verified to agree with the form induced by the folded labels.
    """
    sigma = tuple(sigma)
    n = sys.n
    if sorted(sigma) != list(range(n)):
        raise ValueError("sigma is not a permutation of the index set")
    for i in range(n):
        for j in range(n):
            if sys.matrix[sigma[i]][sigma[j]] != sys.matrix[i][j]:
                raise ValueError("sigma is not a Coxeter-graph automorphism")
    for pair, val in sys.mu.items():
        i, j = pair
        if sys.mu[frozenset((sigma[i], sigma[j]))] != val:
            raise ValueError("sigma does not preserve the infinite-bond weights")
    orbits = _orbit_list(sigma)
    edge_set = {frozenset(e) for e in sys.graph_edges()}
    for orb in orbits:
        for a in orb:
            for b in orb:
                if a < b and frozenset((a, b)) in edge_set:
                    raise ValueError(f"orbit {orb} is not an independent set")

    k = len(orbits)
    reps = [o[0] for o in orbits]
    B = sys.B

    def deg_lab(o_idx, p_idx):
        """Edges and labels from the representative of orbit o into orbit p."""
        rep = reps[o_idx]
        labs = []
        for i2 in orbits[p_idx]:
            m = sys.matrix[rep][i2]
            if m == INF or m >= 3:
                labs.append(m)
        return len(labs), sorted(labs, key=lambda x: (x == INF, x))

    folded_matrix = [[1 if a == b else 2 for b in range(k)] for a in range(k)]
    form_sq = {}
    for a in range(k):
        for b in range(a + 1, k):
            d_ab, lab_ab = deg_lab(a, b)
            d_ba, lab_ba = deg_lab(b, a)
            if d_ab > d_ba:
                d_lo, lab_hi = d_ba, lab_ab
            else:
                d_lo, lab_hi = d_ab, lab_ba
            if d_lo == 0:
                mf = 2
            elif d_lo == 1 and d_ab == d_ba:
                assert lab_ab == lab_ba
                mf = lab_ab[0]
            elif d_lo == 1 and lab_hi == [3, 3]:
                mf = 4
            elif d_lo == 1 and lab_hi == [3, 3, 3]:
                mf = 6
            else:
                mf = INF
            folded_matrix[a][b] = folded_matrix[b][a] = mf
            s1 = sys.field.zero
            for i2 in orbits[b]:
                s1 = s1 + B[reps[a]][i2]
            s2 = sys.field.zero
            for i1 in orbits[a]:
                s2 = s2 + B[reps[b]][i1]
            form_sq[(a, b)] = s1 * s2  # = (folded form entry)^2, entry <= 0

    # Verify the folded form against the form induced by the folded labels,
    # and extract mu weights for new infinite bonds.
    Nf = 1
    for a in range(k):
        for b in range(a + 1, k):
            mf = folded_matrix[a][b]
            if mf != INF and mf >= 3:
                Nf = _lcm(Nf, mf)
    common = CosField(_lcm(sys.field.N, Nf))
    mu_fold = {}
    form_values = {}
    for (a, b), sq in form_sq.items():
        mf = folded_matrix[a][b]
        sq_c = lift(sq, common)
        if mf == 2:
            if not sq_c.is_zero():
                raise ArithmeticError("folded form mismatch on a commuting pair")
            form_values[(a, b)] = common.zero
        elif mf != INF:
            c = common.cos_pi_over(mf)
            if not (sq_c - c * c).is_zero():
                raise ArithmeticError(
                    f"folded form mismatch on orbit pair {(a, b)}: label {mf}"
                )
            form_values[(a, b)] = -c
        else:
            if (sq_c - 1).sign() < 0:
                raise ArithmeticError(
                    "folded form entry on an infinite bond is above -1"
                )
            mu = _sqrt_in_some_field(sq_c, hint_Ns=[common.N])
            mu_fold[(a, b)] = mu
            form_values[(a, b)] = -mu

    labels = ["+".join(sys.labels[i] for i in orb) for orb in orbits]
    mu_arg = {frozenset(p): v for p, v in mu_fold.items()}
    field_N = Nf
    for v in mu_fold.values():
        field_N = _lcm(field_N, v.field.N)
    folded = CoxeterSystem(labels, folded_matrix, mu_arg, field_N=field_N)
    return FoldingMap(sys, sigma, orbits, folded, form_values)


# -- JSON interchange ---------------------------------------------------


def system_from_json(doc) -> CoxeterSystem:
    if isinstance(doc, str):
        doc = json.loads(doc)
    labels = doc["labels"]
    matrix = [
        [INF if x == "inf" else int(x) for x in row] for row in doc["matrix"]
    ]
    mu = {}
    for key, val in doc.get("mu", {}).items():
        i_name, j_name = key.split(",")
        i = labels.index(i_name)
        j = labels.index(j_name)
        mu[frozenset((i, j))] = Fraction(val)
    return CoxeterSystem(labels, matrix, mu)


def system_to_json(sys: CoxeterSystem) -> dict:
    matrix = [
        ["inf" if x == INF else x for x in row] for row in sys.matrix
    ]
    mu = {}
    for pair, val in sys.mu.items():
        i, j = sorted(pair)
        if val.is_rational():
            mu[f"{sys.labels[i]},{sys.labels[j]}"] = str(val.as_fraction())
        else:
            mu[f"{sys.labels[i]},{sys.labels[j]}"] = val.to_str()
    out = {"labels": list(sys.labels), "matrix": matrix}
    if mu:
        out["mu"] = mu
    return out
