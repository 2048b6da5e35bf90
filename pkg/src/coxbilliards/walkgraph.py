"""The small-root billiards graph, closed-walk search, and walk lifting.

Vertices are the small roots plus a sink standing for the negative roots.
Edge solidity is three-valued: solid and dotted classifications are backed
by sound certificates, everything else is reported unknown.  Walk search
treats unknown as non-solid, which makes an empty search result trustworthy
evidence while lifted walks are always re-verified by replay.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from .system import CoxeterSystem, is_finite, parabolic, system_from_json, system_to_json
from .elements import (
    GroupElement,
    identity,
    element_of,
    reduced_word,
    word_to_json,
    word_from_json,
)
from .convex import ConvexSet, Effort, hull_expand, convex_from_json, convex_to_json
from . import roots as rt

__all__ = [
    "SOLID",
    "DOTTED",
    "UNKNOWN_EDGE",
    "GraphEdge",
    "SmallRootGraph",
    "build_graph",
    "betwixt",
    "ClosedWalk",
    "search_plausible_walks",
    "WalkCertificate",
    "lift_walk",
    "verify_certificate",
    "graph_to_dot",
    "certificate_to_json",
    "certificate_from_json",
]

SOLID = "solid"
DOTTED = "dotted"
UNKNOWN_EDGE = "unknown"

NEG = "NEG"  # sink vertex standing for the negative roots


@dataclass(frozen=True)
class GraphEdge:
    src: int
    dst: int
    label: int
    solidity: str


class SmallRootGraph:
    def __init__(self, sys: CoxeterSystem, vertices, edges):
        self.sys = sys
        self.vertices = list(vertices)  # roots; the sink is index len(vertices)
        self.neg_index = len(self.vertices)
        self.vertex_index = {v: k for k, v in enumerate(self.vertices)}
        self.edges = list(edges)
        self.out_edges = [[] for _ in range(self.neg_index + 1)]
        for eid, e in enumerate(self.edges):
            self.out_edges[e.src].append(eid)

    def solid_labels_at(self, v: int):
        return {self.edges[eid].label for eid in self.out_edges[v]
                if self.edges[eid].solidity == SOLID}

    def unknown_count(self) -> int:
        return sum(1 for e in self.edges if e.solidity == UNKNOWN_EDGE)

    def __repr__(self):
        return (
            f"SmallRootGraph({len(self.vertices)}+sink vertices, "
            f"{len(self.edges)} edges, {self.unknown_count()} unknown)"
        )


def _support(root):
    return frozenset(i for i, x in enumerate(root) if not x.is_zero())


def _as_signed_simple(sys: CoxeterSystem, root):
    """(index, sign) when the root is +-alpha_i, else None."""
    idx = None
    sign = 0
    for i, x in enumerate(root):
        s = x.sign()
        if s == 0:
            continue
        if idx is not None or not (x - 1).is_zero() and not (x + 1).is_zero():
            return None
        idx, sign = i, s
    if idx is None:
        return None
    return (idx, sign)


def _coset_emptiness_certificate(sys, gamma, i, candidates, depth):
    """Solidity certificate of the last resort: search v with v*gamma and
    v*alpha_i (and some positive root) sent to signed simple roots whose
    required-negative index set generates an infinite parabolic."""
    alpha_i = rt.simple_root(sys, i)
    frontier = [(identity(sys), gamma, alpha_i)]
    seen = {frontier[0][0]}
    for _ in range(depth + 1):
        nxt = []
        for v, vg, va in frontier:
            sg = _as_signed_simple(sys, vg)
            sa = _as_signed_simple(sys, va)
            if sg is not None and sa is not None:
                j2, e2 = sg
                j3, e3 = sa
                required = {j2: -e2, j3: e3}
                if len(required) < 2 and -e2 != e3:
                    return True  # gamma and alpha_i constraints conflict alone
                if len(required) == 2:
                    for gamma_p in candidates:
                        if gamma_p == gamma:
                            continue
                        sp = _as_signed_simple(sys, v.apply(gamma_p))
                        if sp is None:
                            continue
                        j1, e1 = sp
                        req = dict(required)
                        if j1 in req:
                            if req[j1] != e1:
                                return True  # conflicting demands: empty
                            continue
                        req[j1] = e1
                        J = [j for j, s in req.items() if s < 0]
                        if not is_finite(parabolic(sys, J)):
                            return True
            for k in range(sys.n):
                h = v.left_mul_gen(k)
                if h not in seen:
                    seen.add(h)
                    nxt.append((h, rt.apply_simple(sys, k, vg), rt.apply_simple(sys, k, va)))
        frontier = nxt
    return False


def build_graph(sys: CoxeterSystem, universe_depth: int = 8, coset_depth: int = 4) -> SmallRootGraph:
    """Construct the graph over the small roots with classified solidity."""
    sigma = sorted(rt.small_roots(sys), key=lambda v: tuple(x.to_str() for x in v))
    sigma_set = set(sigma)
    universe = set(rt.enumerate_roots(sys, universe_depth))
    # Always include the full dihedral root sets of the finite bonds: they
    # are what certifies the in-plane upward edges.
    for i in range(sys.n):
        for j in range(i + 1, sys.n):
            m = sys.matrix[i][j]
            if m != float("inf"):
                for k in range(2 * m):
                    universe.add(rt.rank2_root(sys, i, j, k))
    positives = [v for v in universe if rt.root_sign(v) > 0]

    vertices = list(sigma)
    graph = SmallRootGraph(sys, vertices, [])
    edges = []

    def classify(gamma, i, img):
        b = rt.form_with_simple(sys, gamma, i)
        if b.sign() > 0:
            return SOLID
        # downward-combination certificate: gamma' = a*gamma - a'*alpha_i
        alpha_i = rt.simple_root(sys, i)
        span_sup = _support(gamma) | {i}
        for gp in positives:
            if gp == gamma or not (_support(gp) <= span_sup):
                continue
            combo = rt.nonneg_combination(gp, gamma, rt.negate(alpha_i))
            if combo is not None and combo[0].sign() > 0 and combo[1].sign() > 0:
                return SOLID
        if gamma[i].is_zero():
            return DOTTED
        # rank-2 in-plane edges are all solid (covered above when the
        # dihedral roots are in the universe); remaining cases get the
        # coset-emptiness search, then honesty.
        cands = [v for v in positives if len(_support(v)) <= 2]
        if _coset_emptiness_certificate(sys, gamma, i, cands, coset_depth):
            return SOLID
        return UNKNOWN_EDGE

    for gamma in sigma:
        gidx = graph.vertex_index[gamma]
        for i in range(sys.n):
            img = rt.apply_simple(sys, i, gamma)
            if img == gamma:
                edges.append(GraphEdge(gidx, gidx, i, classify(gamma, i, img)))
            elif img in sigma_set:
                edges.append(GraphEdge(gidx, graph.vertex_index[img], i, classify(gamma, i, img)))
    for i in range(sys.n):
        a = rt.simple_root(sys, i)
        edges.append(GraphEdge(graph.vertex_index[a], graph.neg_index, i, SOLID))
    return SmallRootGraph(sys, vertices, edges)


def betwixt(ordering, mid: int, first: int, last: int) -> bool:
    """Cyclic interposition: does mid occur strictly between consecutive
    occurrences of first and last in the repeated ordering?"""
    pos = {lab: k for k, lab in enumerate(ordering)}
    j, jp, jpp = pos[first], pos[mid], pos[last]
    return (j < jp < jpp) or (jp < jpp <= j) or (jpp <= j < jp)


@dataclass(frozen=True)
class ClosedWalk:
    vertices: tuple  # vertex indices v_1..v_d
    edge_ids: tuple  # edge ids e_1..e_d, e_k from v_k to v_{k+1}

    def __len__(self):
        return len(self.edge_ids)


def _canonical_rotation(seq):
    best = None
    n = len(seq)
    for r in range(n):
        rot = seq[r:] + seq[:r]
        if best is None or rot < best:
            best = rot
    return best


def search_plausible_walks(graph: SmallRootGraph, ordering, max_len: int, max_results: int = 1000):
    """All closed walks of length <= max_len satisfying the no-solid-betwixt
    condition (unknown edges treated as non-solid) whose label product is the
    identity, up to cyclic rotation."""
    sys = graph.sys
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(sys.n)):
        raise ValueError("ordering must list every index exactly once")
    E = len(graph.edges)
    solid_at = [graph.solid_labels_at(v) for v in range(graph.neg_index + 1)]

    def allowed(e_prev: int, e_next: int) -> bool:
        ep, en = graph.edges[e_prev], graph.edges[e_next]
        if ep.dst != en.src:
            return False
        for lab in solid_at[en.src]:
            if betwixt(ordering, lab, ep.label, en.label):
                return False
        return True

    succ = [[f for f in range(E) if allowed(e, f)] for e in range(E)]

    # Restrict to edges that lie on some cycle of the transition digraph.
    live = set()
    for e in range(E):
        stack = list(succ[e])
        seen = set(stack)
        while stack:
            x = stack.pop()
            if x == e:
                live.add(e)
                break
            for y in succ[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    ident = identity(sys)
    len_memo: dict = {ident: 0}

    def elen(g):
        v = len_memo.get(g)
        if v is None:
            v = len(reduced_word(g))
            len_memo[g] = v
        return v

    results = {}

    def dfs(first, path, prod):
        if len(results) >= max_results:
            return
        depth = len(path)
        if prod.is_identity() and allowed(path[-1], first):
            results[_canonical_rotation(tuple(path))] = True
        if depth == max_len:
            return
        for f in succ[path[-1]]:
            if f < first or f not in live:
                continue
            g = prod.left_mul_gen(graph.edges[f].label)
            # cannot return to the identity in the remaining steps
            if elen(g) > max_len - depth - 1:
                continue
            dfs(first, path + [f], g)

    for e in sorted(live):
        g = ident.left_mul_gen(graph.edges[e].label)
        dfs(e, [e], g)

    walks = []
    for seq in sorted(results):
        verts = tuple(graph.edges[eid].src for eid in seq)
        walks.append(ClosedWalk(verts, seq))
    return walks


@dataclass
class WalkCertificate:
    """A replayable witness that a convex set is not heavy: the toggle
    trajectory from u0 is periodic while u0 stays outside the set."""

    sys: CoxeterSystem
    ordering: tuple
    u0_word: tuple
    convex: ConvexSet
    period: int
    digest: str | None = None
    name: str = ""


def _find_in_halfspace_cone(sys, must_in, effort):
    """Some element z with z*beta positive for every beta in must_in."""
    start = identity(sys)
    seen = {start}
    frontier = [start]
    for _ in range(effort.search_radius + 1):
        for w in frontier:
            if all(rt.root_sign(w.apply(b)) > 0 for b in must_in):
                return w
        nxt = []
        for w in frontier:
            for i in range(sys.n):
                h = w.left_mul_gen(i)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return None


def lift_walk(sys: CoxeterSystem, walk: ClosedWalk, graph: SmallRootGraph, ordering, effort: Effort | None = None):
    """Try to realize a billiards-plausible walk as a periodic trajectory.

    Each cyclic rotation of the walk is embedded greedily into the repeated
    ordering; the stay steps dictate roots that must be mirrors (MustIn) and
    the move steps roots that must not be (MustOut).  A finite hull K inside
    every MustIn half-space with a violator for every MustOut root yields a
    candidate certificate, which is accepted only if the replay verifies."""
    effort = effort or Effort()
    ordering = tuple(ordering)
    n = sys.n
    d = len(walk)
    labels = [graph.edges[eid].label for eid in walk.edge_ids]
    for rot in range(d):
        lab = labels[rot:] + labels[:rot]
        # Greedy embedding into the periodic ordering.
        steps = []
        j = 0
        ok = True
        for lam in lab:
            step = j + 1
            while ordering[(step - 1) % n] != lam:
                step += 1
            steps.append(step)
            j = step
        K = (steps[-1] + n - 1) // n
        total = K * n
        moves = set(steps)
        must_in, must_out = set(), set()
        u = identity(sys)
        for s in range(1, total + 1):
            i = ordering[(s - 1) % n]
            delta = u.inv_column(i)
            if s in moves:
                must_out.add(delta)
                u = u.left_mul_gen(i)
            else:
                must_in.add(delta)
        if not u.is_identity():
            continue  # the embedding does not close up
        # The rotation's start vertex is -u0*beta for a transmitting root
        # beta; demanding that (negative) root as a mirror keeps u0 = 1
        # outside the lifted hull.
        start_vertex = graph.vertices[walk.vertices[rot % d]]
        must_in.add(rt.negate(start_vertex))
        conflict = any(b in must_out or rt.negate(b) in must_out for b in must_in)
        if conflict or any(rt.negate(b) in must_in for b in must_in):
            continue
        z = _find_in_halfspace_cone(sys, must_in, effort)
        if z is None:
            continue
        # Breadth-first pool inside the MustIn cone (a convex set).
        pool = [z]
        pool_set = {z}
        frontier = [z]
        for _ in range(effort.search_radius):
            nxt = []
            for w in frontier:
                for i in range(n):
                    h = w.left_mul_gen(i)
                    if h in pool_set:
                        continue
                    if all(rt.root_sign(h.apply(b)) > 0 for b in must_in):
                        pool_set.add(h)
                        pool.append(h)
                        nxt.append(h)
            frontier = nxt
            if len(pool) > 4000:
                break
        hull_gens = []
        covered = True
        for delta in must_out:
            pick = None
            for w in pool:
                if rt.root_sign(w.apply(delta)) < 0:
                    pick = w
                    break
            if pick is None:
                covered = False
                break
            if pick not in hull_gens:
                hull_gens.append(pick)
        if not covered:
            continue
        L = ConvexSet(sys, generators=hull_gens)
        cert = WalkCertificate(sys, ordering, (), L, K)
        if verify_certificate(cert, effort):
            from .billiards import run_trajectory, trajectory_digest

            rec = run_trajectory(sys, L, ordering, identity(sys), K * n, effort, stop_on_cycle=False)
            cert.digest = trajectory_digest(sys, rec)
            return cert
    return None


def verify_certificate(cert: WalkCertificate, effort: Effort | None = None) -> bool:
    """Replay the certified trajectory and re-check every claim."""
    from .billiards import run_trajectory, trajectory_digest

    effort = effort or Effort()
    sys = cert.sys
    u0 = element_of(sys, cert.u0_word)
    from .convex import OracleUndecided

    try:
        rec = run_trajectory(
            sys, cert.convex, cert.ordering, u0, cert.period * sys.n, effort,
            stop_on_cycle=False,
        )
    except OracleUndecided:
        return False
    if len(rec.steps) != cert.period * sys.n:
        return False
    if rec.steps[-1].element != u0:
        return False
    if cert.convex.kind == "hull":
        # membership without expanding the hull: u is inside iff Sep(u) = {}
        from .convex import separators

        sep = separators(sys, cert.convex, u0, effort)
        if not sep.complete or not sep.roots:
            return False
    else:
        if cert.convex.contains(u0):
            return False
    if cert.digest is not None and trajectory_digest(sys, rec) != cert.digest:
        return False
    return True


def graph_to_dot(graph: SmallRootGraph) -> str:
    """DOT output; dotted edges are dashed, unknown edges flagged by color."""
    sys = graph.sys
    lines = ["digraph smallroots {"]
    for k, v in enumerate(graph.vertices):
        label = "(" + ",".join(rt.root_to_strs(v)) + ")"
        lines.append(f'  v{k} [label="{label}"];')
    lines.append(f'  v{graph.neg_index} [label="NEG", shape=box];')
    for e in sorted(graph.edges, key=lambda e: (e.src, e.dst, e.label)):
        style = "solid" if e.solidity == SOLID else "dashed"
        color = ', color="red"' if e.solidity == UNKNOWN_EDGE else ""
        lines.append(
            f'  v{e.src} -> v{e.dst} [label="{sys.labels[e.label]}", style={style}{color}];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def certificate_to_json(cert: WalkCertificate) -> dict:
    return {
        "name": cert.name,
        "system": system_to_json(cert.sys),
        "ordering": [cert.sys.labels[i] for i in cert.ordering],
        "u0": word_to_json(cert.u0_word, cert.sys),
        "convex": convex_to_json(cert.convex),
        "period": cert.period,
        "digest": cert.digest,
    }


def certificate_from_json(doc) -> WalkCertificate:
    sys = system_from_json(doc["system"])
    ordering = tuple(sys.index(x) for x in doc["ordering"])
    u0_word = word_from_json(doc["u0"], sys)
    convex = convex_from_json(doc["convex"], sys)
    return WalkCertificate(
        sys, ordering, u0_word, convex, int(doc["period"]),
        doc.get("digest"), doc.get("name", ""),
    )
