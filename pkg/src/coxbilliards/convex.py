"""Convex subsets of W, the root-membership oracle, separators and strata.

A convex set is given either as the hull of finitely many elements or as an
intersection of signed half-spaces with a witness member.  Root membership
queries (is beta in R(L)?) are exact for hulls; for half-space presentations
they are answered by a pair of semi-procedures (a closure certificate for
Yes, a member search for No) and may honestly return UNKNOWN within the
configured effort bounds.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .system import CoxeterSystem
from .elements import GroupElement, identity, inversion_roots, element_of, word_to_json, word_from_json, reduced_word
from . import roots as rt

__all__ = [
    "YES",
    "NO",
    "UNKNOWN",
    "Effort",
    "OracleUndecided",
    "ConvexSet",
    "hull_expand",
    "in_RL",
    "SeparatorSet",
    "separators",
    "Stratum",
    "stratum_of",
    "transmitting_roots",
    "tau_equivalent",
    "convex_from_json",
    "convex_to_json",
]

YES = "yes"
NO = "no"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Effort:
    """Bounds for the semi-decidable searches."""

    search_radius: int = 12
    universe_depth: int = 8
    max_steps: int | None = None
    max_walk_len: int = 24
    stratum_cap: int = 4096
    beam_width: int = 256

    def steps_for(self, sys: CoxeterSystem) -> int:
        if self.max_steps is not None:
            return self.max_steps
        return 10 * sys.n * 50


class OracleUndecided(RuntimeError):
    """A membership query could not be decided within the effort bounds."""

    def __init__(self, root, message):
        super().__init__(message)
        self.root = root


class ConvexSet:
    """Hull(generators) or an intersection of signed half-spaces."""

    def __init__(self, sys: CoxeterSystem, *, generators=None, constraints=None, witness=None):
        self.sys = sys
        if (generators is None) == (constraints is None):
            raise ValueError("give exactly one of generators / constraints")
        if generators is not None:
            gens = tuple(dict.fromkeys(generators))
            if not gens:
                raise ValueError("hull generators must be nonempty")
            self.kind = "hull"
            self.generators = gens
            self.constraints = None
            self.witness = None
        else:
            cons = []
            for root, sign in constraints:
                if sign not in (+1, -1):
                    raise ValueError("constraint sign must be +1 or -1")
                cons.append((tuple(root), sign))
            if not cons:
                raise ValueError("half-space list must be nonempty")
            self.kind = "halfspaces"
            self.generators = None
            self.constraints = tuple(cons)
            if witness is not None and not self._satisfies(witness):
                raise ValueError("witness violates a half-space constraint")
            self.witness = witness
        self._memo: dict = {}
        self._closure = None
        self._closure_depth = -1
        self._member_images: dict[GroupElement, tuple] = {}
        self._expanded = None

    # -- common helpers --------------------------------------------------

    def signed_constraint_roots(self):
        out = []
        for root, sign in self.constraints:
            out.append(root if sign > 0 else rt.negate(root))
        return out

    def _satisfies(self, w: GroupElement) -> bool:
        for root, sign in self.constraints:
            if rt.root_sign(w.apply(root)) != sign:
                return False
        return True

    def any_member(self, effort: Effort) -> GroupElement:
        if self.kind == "hull":
            return self.generators[0]
        if self.witness is None:
            self.witness = self._find_witness(effort)
        return self.witness

    def _find_witness(self, effort: Effort) -> GroupElement:
        start = identity(self.sys)
        seen = {start}
        frontier = [start]
        for _ in range(effort.search_radius + 1):
            for w in frontier:
                if self._satisfies(w):
                    return w
            nxt = []
            for w in frontier:
                for i in range(self.sys.n):
                    h = w.left_mul_gen(i)
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
            if not frontier:
                break
        raise ValueError(
            "no member of the half-space set found within the search radius; "
            "the set may be empty"
        )

    def contains(self, u: GroupElement, effort: Effort | None = None) -> bool:
        """Exact membership of a single element."""
        if self.kind == "halfspaces":
            return self._satisfies(u)
        return u in self.expanded(effort)

    def expanded(self, effort: Effort | None = None):
        if self.kind != "hull":
            raise ValueError("expanded() needs a hull presentation")
        if self._expanded is None:
            self._expanded = hull_expand(self.sys, self.generators)
        return self._expanded

    # -- membership search machinery (half-space case) --------------------

    def _ensure_closure(self, depth: int):
        if self._closure is not None and self._closure_depth >= depth:
            return
        universe = set(rt.enumerate_roots(self.sys, depth))
        base = set(self.signed_constraint_roots())
        universe |= base
        self._closure = rt.close_root_set(base, universe)
        self._closure_depth = depth

    def _images_of(self, w: GroupElement):
        imgs = self._member_images.get(w)
        if imgs is None:
            imgs = tuple(w.apply(r) for r in self.signed_constraint_roots())
            self._member_images[w] = imgs
        return imgs

    def _search_violator(self, delta, effort: Effort):
        """Look for a member w of the half-space set with w(delta) negative.

        Members are enumerated inside the set (it is convex, hence connected
        in the Cayley graph) by a beam search steered toward small values of
        w(delta); every member met on the way is cached for later queries.
        """
        sys = self.sys
        n = sys.n
        w0 = self.any_member(effort)
        self._images_of(w0)

        def height(vec):
            return sum(x.approx() for x in vec)

        # Cached members double as seeds.
        seeds = []
        for w in self._member_images:
            dv = w.apply(delta)
            if rt.root_sign(dv) < 0:
                return w, False
            seeds.append((height(dv), w, dv))
        seeds.sort(key=lambda t: t[0])
        truncated = len(seeds) > effort.beam_width
        beam = [(w, self._member_images[w], dv) for _, w, dv in seeds[: effort.beam_width]]
        visited = {w for w, _, _ in beam}
        max_layers = 4 * effort.search_radius
        exhausted = False
        for layer in range(max_layers + 1):
            nxt = []
            for w, imgs, dv in beam:
                for i in range(n):
                    h = w.left_mul_gen(i)
                    if h in visited:
                        continue
                    visited.add(h)
                    himgs = []
                    ok = True
                    for img in imgs:
                        im2 = rt.apply_simple(sys, i, img)
                        if rt.root_sign(im2) < 0:
                            ok = False
                            break
                        himgs.append(im2)
                    if not ok:
                        continue
                    himgs = tuple(himgs)
                    self._member_images[h] = himgs
                    hdv = rt.apply_simple(sys, i, dv)
                    if rt.root_sign(hdv) < 0:
                        return h, False
                    nxt.append((h, himgs, hdv))
            if not nxt:
                exhausted = not truncated
                break
            if len(nxt) > effort.beam_width:
                truncated = True
            nxt.sort(key=lambda t: height(t[2]))
            beam = nxt[: effort.beam_width]
        return None, exhausted

    def key(self):
        if self.kind == "hull":
            return ("hull", self.generators)
        return ("halfspaces", self.constraints)

    def __repr__(self):
        if self.kind == "hull":
            return f"ConvexSet(hull of {len(self.generators)} elements)"
        return f"ConvexSet({len(self.constraints)} half-spaces)"


def hull_expand(sys: CoxeterSystem, generators):
    """Geodesic-convex closure: repeatedly add s_i x whenever that step moves
    x strictly closer to another member y in the left Cayley graph."""
    members = list(dict.fromkeys(generators))
    member_set = set(members)
    queue = [(x, y) for x in members for y in members if x != y]
    while queue:
        x, y = queue.pop()
        z = x * y.inverse()
        for i in range(sys.n):
            if rt.root_sign(z.inv_column(i)) < 0:  # s_i shortens x y^{-1}
                cand = x.left_mul_gen(i)
                if cand not in member_set:
                    member_set.add(cand)
                    for other in members:
                        queue.append((cand, other))
                        queue.append((other, cand))
                    members.append(cand)
    return frozenset(member_set)


def in_RL(sys: CoxeterSystem, L: ConvexSet, beta, effort: Effort | None = None) -> str:
    """Three-valued test for beta in R(L) = {roots delta : L subset H_delta+}."""
    effort = effort or Effort()
    beta = tuple(beta)
    memo = L._memo
    hit = memo.get(beta)
    if hit is not None:
        return hit
    if L.kind == "hull":
        verdict = YES
        for w in L.generators:
            if rt.root_sign(w.apply(beta)) < 0:
                verdict = NO
                break
        memo[beta] = verdict
        return verdict
    # Half-space presentation: Yes by closure certificate (the constraint
    # roots generate part of R(L) by closedness), No by exhibiting a member
    # on the wrong side of the hyperplane.
    if beta in L.signed_constraint_roots():
        memo[beta] = YES
        return YES
    L._ensure_closure(effort.universe_depth)
    if beta in L._closure:
        memo[beta] = YES
        return YES
    violator, exhausted = L._search_violator(beta, effort)
    if violator is not None:
        memo[beta] = NO
        return NO
    if exhausted:
        # The member search enumerated the whole (finite) set: exact answer.
        memo[beta] = YES
        return YES
    return UNKNOWN


@dataclass(frozen=True)
class SeparatorSet:
    roots: frozenset
    complete: bool

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)


def separators(sys: CoxeterSystem, L: ConvexSet, u: GroupElement, effort: Effort | None = None) -> SeparatorSet:
    """Sep(u): roots of R(L) sent negative by u.  Candidates are pulled back
    from the inversion roots of u w0^{-1} for one member w0; finiteness of
    the candidate list is what makes Sep computable."""
    effort = effort or Effort()
    w0 = L.any_member(effort)
    rel = u * w0.inverse()
    out = set()
    complete = True
    for gamma in inversion_roots(rel):
        beta = w0.apply_inverse(gamma)
        verdict = in_RL(sys, L, beta, effort)
        if verdict == YES:
            out.add(tuple(beta))
        elif verdict == UNKNOWN:
            complete = False
    return SeparatorSet(frozenset(out), complete)


@dataclass(frozen=True)
class Stratum:
    separator: frozenset
    members: frozenset
    complete: bool


def stratum_of(sys: CoxeterSystem, L: ConvexSet, u: GroupElement, cap: int | None = None, effort: Effort | None = None) -> Stratum:
    """All elements sharing Sep(u), by breadth-first closure under the moves
    v -> s_i v that preserve the separator set."""
    effort = effort or Effort()
    if cap is None:
        cap = effort.stratum_cap
    sep0 = separators(sys, L, u, effort)
    complete = sep0.complete
    members = {u}
    frontier = [u]
    truncated = False
    while frontier and not truncated:
        nxt = []
        for v in frontier:
            for i in range(sys.n):
                w = v.left_mul_gen(i)
                if w in members:
                    continue
                sep = separators(sys, L, w, effort)
                complete = complete and sep.complete
                if sep.roots == sep0.roots:
                    members.add(w)
                    nxt.append(w)
                    if len(members) > cap:
                        truncated = True
                        break
            if truncated:
                break
        frontier = nxt
    return Stratum(sep0.roots, frozenset(members), complete and not truncated)


def transmitting_roots(sys: CoxeterSystem, L: ConvexSet, stratum: Stratum) -> frozenset:
    """Separators of the stratum of the form -w^{-1} a_i for a member w."""
    if not stratum.complete:
        raise ValueError("transmitting roots require a completely explored stratum")
    out = set()
    for w in stratum.members:
        for i in range(sys.n):
            beta = rt.negate(w.inv_column(i))
            if beta in stratum.separator:
                out.add(beta)
    return frozenset(out)


def _toggle_digraph(sys: CoxeterSystem, L: ConvexSet, Q, effort: Effort):
    """Labeled digraph with an i-edge u -> toggle_i(u) for u in Q."""
    from .billiards import toggle  # local import to avoid a cycle

    nodes = list(dict.fromkeys(Q))
    edges = []
    extra = []
    node_set = set(nodes)
    for u in nodes:
        for i in range(sys.n):
            v = toggle(sys, L, i, u, effort)
            if v not in node_set:
                node_set.add(v)
                extra.append(v)
            edges.append((u, i, v))
    return nodes + extra, edges


def tau_equivalent(sys: CoxeterSystem, L: ConvexSet, Q, Q2, effort: Effort | None = None) -> bool:
    """Whether the labeled toggle digraphs of Q and Q2 are isomorphic."""
    effort = effort or Effort()
    n1, e1 = _toggle_digraph(sys, L, Q, effort)
    n2, e2 = _toggle_digraph(sys, L, Q2, effort)
    if len(n1) != len(n2) or len(e1) != len(e2):
        return False

    def signature(nodes, edges):
        out_l = {v: [] for v in nodes}
        in_l = {v: [] for v in nodes}
        loops = {v: [] for v in nodes}
        for a, i, b in edges:
            if a == b:
                loops[a].append(i)
            else:
                out_l[a].append(i)
                in_l[b].append(i)
        return {
            v: (tuple(sorted(loops[v])), tuple(sorted(out_l[v])), tuple(sorted(in_l[v])))
            for v in nodes
        }

    sig1, sig2 = signature(n1, e1), signature(n2, e2)
    if sorted(sig1.values()) != sorted(sig2.values()):
        return False
    adj1 = {(a, i): b for a, i, b in e1}
    adj2 = {(a, i): b for a, i, b in e2}
    order = sorted(n1, key=lambda v: (sig1[v], 0))
    cands = {v: [w for w in n2 if sig2[w] == sig1[v]] for v in n1}

    mapping: dict = {}
    used: set = set()

    def consistent(v, w):
        for i in range(sys.n):
            tv = adj1.get((v, i))
            tw = adj2.get((w, i))
            if (tv is None) != (tw is None):
                return False
            if tv is not None and tv in mapping and mapping[tv] != tw:
                return False
        for a, i, b in e1:
            if b == v and a in mapping and adj2.get((mapping[a], i)) != w:
                return False
        return True

    def backtrack(k):
        if k == len(order):
            return True
        v = order[k]
        for w in cands[v]:
            if w in used:
                continue
            if not consistent(v, w):
                continue
            mapping[v] = w
            used.add(w)
            if backtrack(k + 1):
                return True
            del mapping[v]
            used.discard(w)
        return False

    return backtrack(0)


# -- JSON interchange ---------------------------------------------------


def convex_from_json(doc, sys: CoxeterSystem) -> ConvexSet:
    if "hull" in doc:
        gens = [element_of(sys, word_from_json(w, sys)) for w in doc["hull"]]
        return ConvexSet(sys, generators=gens)
    cons = []
    for item in doc["halfspaces"]:
        root = rt.root_from_strs(item["root"], sys)
        sign = +1 if item["sign"] == "+" else -1
        cons.append((root, sign))
    witness = None
    if "witness" in doc:
        witness = element_of(sys, word_from_json(doc["witness"], sys))
    return ConvexSet(sys, constraints=cons, witness=witness)


def convex_to_json(L: ConvexSet) -> dict:
    if L.kind == "hull":
        return {
            "hull": [word_to_json(reduced_word(g), L.sys) for g in L.generators]
        }
    out = {
        "halfspaces": [
            {"root": rt.root_to_strs(root), "sign": "+" if sign > 0 else "-"}
            for root, sign in L.constraints
        ]
    }
    if L.witness is not None:
        out["witness"] = word_to_json(reduced_word(L.witness), L.sys)
    return out
