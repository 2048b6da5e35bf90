"""Roots of the geometric representation: orbits, positivity, small roots."""

from __future__ import annotations

from .scalars import Scalar
from .system import CoxeterSystem

__all__ = [
    "simple_root",
    "apply_simple",
    "root_sign",
    "is_positive",
    "negate",
    "enumerate_roots",
    "rank2_root",
    "small_roots",
    "nonneg_combination",
    "close_root_set",
    "root_to_strs",
    "root_from_strs",
]

Root = tuple  # tuple[Scalar, ...] in the simple-root basis


def simple_root(sys: CoxeterSystem, i: int) -> Root:
    f = sys.field
    return tuple(f.one if j == i else f.zero for j in range(sys.n))


def form(sys: CoxeterSystem, v: Root, w: Root) -> Scalar:
    B = sys.B
    total = sys.field.zero
    for i, vi in enumerate(v):
        if not vi.is_zero():
            row = B[i]
            for j, wj in enumerate(w):
                if not wj.is_zero():
                    total = total + vi * wj * row[j]
    return total


def form_with_simple(sys: CoxeterSystem, v: Root, i: int) -> Scalar:
    B = sys.B
    total = sys.field.zero
    for j, vj in enumerate(v):
        if not vj.is_zero():
            b = B[j][i]
            if not b.is_zero():
                total = total + vj * b
    return total


def apply_simple(sys: CoxeterSystem, i: int, v: Root) -> Root:
    """Image of v under the reflection in the i-th simple root."""
    c = form_with_simple(sys, v, i)
    if c.is_zero():
        return v
    out = list(v)
    out[i] = v[i] - (c + c)
    return tuple(out)


def root_sign(v: Root) -> int:
    """+1 for positive roots, -1 for negative; mixed signs are rejected."""
    pos = neg = False
    for x in v:
        s = x.sign()
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
    if pos and neg:
        raise ValueError(f"vector has mixed coordinate signs, not a root: {v}")
    if not pos and not neg:
        raise ValueError("zero vector is not a root")
    return 1 if pos else -1


def is_positive(v: Root) -> bool:
    return root_sign(v) > 0


def negate(v: Root) -> Root:
    return tuple(-x for x in v)


def enumerate_roots(sys: CoxeterSystem, depth: int) -> frozenset:
    """All roots w*a_i with word length of w at most depth."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    current = {simple_root(sys, i) for i in range(sys.n)}
    seen = set(current)
    for _ in range(depth):
        frontier = set()
        for v in current:
            for i in range(sys.n):
                w = apply_simple(sys, i, v)
                if w not in seen:
                    seen.add(w)
                    frontier.add(w)
        if not frontier:
            break
        current = frontier
    return frozenset(seen)


def rank2_root(sys: CoxeterSystem, i: int, i2: int, k: int) -> Root:
    """The k-th root of the dihedral parabolic on {i, i2}, via the
    Chebyshev coefficients sin((k+1)t)/sin(t), sin(kt)/sin(t) at t=pi/m."""
    m = sys.matrix[i][i2]
    if m == float("inf"):
        raise ValueError("rank-2 root formula requires a finite bond")
    f = sys.field
    x = f.two_cos_pi_over(m)
    k %= 2 * m

    def cheb(j):  # sin((j+1)pi/m)/sin(pi/m), j >= -1
        a, b = f.zero, f.one  # U_{-1}, U_0
        for _ in range(j + 1):
            a, b = b, x * b - a
        return a

    ci, ci2 = cheb(k), cheb(k - 1)
    out = [f.zero] * sys.n
    out[i] = ci
    out[i2] = ci2
    return tuple(out)


def small_roots(sys: CoxeterSystem) -> frozenset:
    """Least set of positive roots containing the simple roots and closed
    under s_i whenever the form against a_i lies strictly in (-1, 0)."""
    simples = [simple_root(sys, i) for i in range(sys.n)]
    out = set(simples)
    frontier = list(simples)
    one = sys.field.one
    while frontier:
        nxt = []
        for gamma in frontier:
            for i in range(sys.n):
                if gamma == simples[i]:
                    continue
                b = form_with_simple(sys, gamma, i)
                if b.sign() < 0 and (b + one).sign() > 0:
                    img = apply_simple(sys, i, gamma)
                    if img not in out:
                        out.add(img)
                        nxt.append(img)
        frontier = nxt
    return frozenset(out)


def nonneg_combination(gamma: Root, beta1: Root, beta2: Root):
    """Solve gamma = a*beta1 + b*beta2 with a, b >= 0 exactly; None if impossible."""
    n = len(gamma)
    field = None
    for x in gamma:
        field = x.field
        break
    zero = field.zero

    def scalar_ratio(v, w):
        """c with v = c*w, or None."""
        c = None
        for a, b in zip(v, w):
            if b.is_zero():
                if not a.is_zero():
                    return None
            else:
                r = a / b
                if c is None:
                    c = r
                elif not (c - r).is_zero():
                    return None
        return c if c is not None else zero

    lam = scalar_ratio(beta2, beta1)
    if lam is not None:
        # Parallel generators: gamma must be a multiple of beta1 too.
        c = scalar_ratio(gamma, beta1)
        if c is None:
            return None
        if c.sign() >= 0:
            return (c, zero)
        if lam.sign() < 0:
            return (zero, c / lam)
        return None
    # Independent: pick two coordinates with an invertible 2x2 block.
    rows = []
    for idx in range(n):
        rows.append((beta1[idx], beta2[idx], gamma[idx]))
    for p in range(n):
        for q in range(p + 1, n):
            det = rows[p][0] * rows[q][1] - rows[p][1] * rows[q][0]
            if det.is_zero():
                continue
            a = (rows[p][2] * rows[q][1] - rows[p][1] * rows[q][2]) / det
            b = (rows[p][0] * rows[q][2] - rows[p][2] * rows[q][0]) / det
            for b1, b2, g in rows:
                if not (a * b1 + b * b2 - g).is_zero():
                    return None
            if a.sign() >= 0 and b.sign() >= 0:
                return (a, b)
            return None
    return None


def close_root_set(R, universe) -> frozenset:
    """Smallest superset of R within universe closed under adjoining any
    universe root that is a nonnegative combination of two members."""
    R = set(R)
    if not R <= set(universe):
        raise ValueError("R must be contained in the universe")
    pending = list(set(universe) - R)
    changed = True
    while changed:
        changed = False
        members = list(R)
        still = []
        for gamma in pending:
            hit = False
            for a_idx in range(len(members)):
                for b_idx in range(a_idx, len(members)):
                    if nonneg_combination(gamma, members[a_idx], members[b_idx]):
                        hit = True
                        break
                if hit:
                    break
            if hit:
                R.add(gamma)
                changed = True
            else:
                still.append(gamma)
        pending = still
    return frozenset(R)


def root_to_strs(v: Root) -> list[str]:
    return [x.to_str() for x in v]


def root_from_strs(strs, sys: CoxeterSystem) -> Root:
    return tuple(Scalar.from_str(s, sys.field) for s in strs)
