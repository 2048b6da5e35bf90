"""Toggles, billiards trajectories, sorting sweeps, bounded heaviness."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from .system import CoxeterSystem, is_finite
from .elements import (
    GroupElement,
    identity,
    element_of,
    enumerate_group,
    reduced_word,
    word_to_json,
)
from .convex import (
    YES,
    NO,
    UNKNOWN,
    ConvexSet,
    Effort,
    OracleUndecided,
    in_RL,
    separators,
    stratum_of,
    tau_equivalent,
)
from . import roots as rt

__all__ = [
    "toggle",
    "apply_toggle_word",
    "pro_c",
    "TrajectoryStep",
    "TrajectoryRecord",
    "run_trajectory",
    "trajectory_tsv",
    "sort_check",
    "FiniteToggleTable",
    "HeavinessVerdict",
    "is_heavy_bounded",
]


def toggle(sys: CoxeterSystem, L: ConvexSet, i: int, u: GroupElement, effort: Effort | None = None) -> GroupElement:
    """Fix u if u^{-1} a_i is a one-way-mirror root of L, else cross to s_i u."""
    effort = effort or Effort()
    delta = u.inv_column(i)
    verdict = in_RL(sys, L, delta, effort)
    if verdict == YES:
        return u
    if verdict == NO:
        return u.left_mul_gen(i)
    raise OracleUndecided(
        delta,
        f"membership of root {rt.root_to_strs(delta)} in R(L) undecided "
        f"within effort bounds (label {sys.labels[i]})",
    )


def apply_toggle_word(sys: CoxeterSystem, L: ConvexSet, word, u: GroupElement, effort: Effort | None = None) -> GroupElement:
    for i in word:
        u = toggle(sys, L, i, u, effort)
    return u


def pro_c(sys: CoxeterSystem, L: ConvexSet, ordering, u: GroupElement, effort: Effort | None = None) -> GroupElement:
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(sys.n)):
        raise ValueError("ordering must list every index exactly once")
    return apply_toggle_word(sys, L, ordering, u, effort)


@dataclass(frozen=True)
class TrajectoryStep:
    index: int          # 1-based step number
    label: int          # generator index toggled
    action: str         # "cross" | "reflect"
    element: GroupElement
    root: tuple         # u_{j-1}^{-1} a_{i_j}


@dataclass
class TrajectoryRecord:
    ordering: tuple
    start: GroupElement
    steps: list
    preperiod: int | None = None   # in full passes of the ordering
    period: int | None = None

    def elements(self):
        return [self.start] + [s.element for s in self.steps]


def run_trajectory(
    sys: CoxeterSystem,
    L: ConvexSet,
    ordering,
    u0: GroupElement,
    max_steps: int,
    effort: Effort | None = None,
    stop_on_cycle: bool = True,
) -> TrajectoryRecord:
    """Iterate the toggles cyclically, logging every step; cycle detection
    compares states at whole-pass boundaries."""
    effort = effort or Effort()
    ordering = tuple(ordering)
    if sorted(ordering) != list(range(sys.n)):
        raise ValueError("ordering must list every index exactly once")
    if max_steps < 0:
        raise ValueError("max_steps must be >= 0")
    n = sys.n
    rec = TrajectoryRecord(ordering=ordering, start=u0, steps=[])
    seen_at = {u0: 0}
    u = u0
    for j in range(1, max_steps + 1):
        i = ordering[(j - 1) % n]
        delta = u.inv_column(i)
        verdict = in_RL(sys, L, delta, effort)
        if verdict == UNKNOWN:
            raise OracleUndecided(
                delta,
                f"trajectory aborted at step {j}: membership of root "
                f"{rt.root_to_strs(delta)} undecided",
            )
        if verdict == YES:
            action = "reflect"
        else:
            action = "cross"
            u = u.left_mul_gen(i)
        rec.steps.append(TrajectoryStep(j, i, action, u, delta))
        if j % n == 0:
            passes = j // n
            if u in seen_at and rec.period is None:
                rec.preperiod = seen_at[u]
                rec.period = passes - seen_at[u]
                if stop_on_cycle:
                    break
            else:
                seen_at[u] = passes
    return rec


def trajectory_tsv(sys: CoxeterSystem, rec: TrajectoryRecord) -> str:
    lines = ["step\tlabel\taction\telement\troot"]
    for s in rec.steps:
        word = reduced_word(s.element)
        word_str = "-".join(word_to_json(word, sys)) or "e"
        root_str = ",".join(rt.root_to_strs(s.root))
        lines.append(
            f"{s.index}\t{sys.labels[s.label]}\t{s.action}\t{word_str}\t{root_str}"
        )
    if rec.period is not None:
        lines.append(f"# preperiod={rec.preperiod} period={rec.period}")
    return "\n".join(lines) + "\n"


def trajectory_digest(sys: CoxeterSystem, rec: TrajectoryRecord) -> str:
    return hashlib.sha256(trajectory_tsv(sys, rec).encode()).hexdigest()


# -- finite-group sweeps ------------------------------------------------


class FiniteToggleTable:
    """Indexed toggle maps over a whole finite group, for set-valued sweeps."""

    def __init__(self, sys: CoxeterSystem):
        if not is_finite(sys):
            raise ValueError("toggle tables require a finite group")
        self.sys = sys
        self.elements = enumerate_group(sys)
        self.index = {g: k for k, g in enumerate(self.elements)}
        n = sys.n
        self.left = [
            [self.index[g.left_mul_gen(i)] for g in self.elements] for i in range(n)
        ]
        self.inv_col = [
            [g.inv_column(i) for i in range(n)] for g in self.elements
        ]
        self._all_roots = None
        self._signs = None

    def root_table(self):
        """All roots, with the sign of g(root) tabulated over the group."""
        if self._all_roots is None:
            from .elements import long_element, reduced_word

            depth = len(reduced_word(long_element(self.sys)))
            self._all_roots = sorted(
                rt.enumerate_roots(self.sys, depth),
                key=lambda v: tuple(x.to_str() for x in v),
            )
            self._signs = [
                [rt.root_sign(g.apply(b)) for b in self._all_roots]
                for g in self.elements
            ]
        return self._all_roots, self._signs

    def brute_hull(self, gens) -> frozenset:
        """Half-space hull: all u with u(beta) positive whenever every
        generator sends beta positive."""
        roots, signs = self.root_table()
        gids = [self.index[g] for g in gens]
        rk = [r for r in range(len(roots)) if all(signs[g][r] > 0 for g in gids)]
        return frozenset(
            self.elements[u]
            for u in range(len(self.elements))
            if all(signs[u][r] > 0 for r in rk)
        )

    def toggle_maps(self, L: ConvexSet, effort: Effort | None = None):
        """For each index i, the toggle as an array over element ids."""
        effort = effort or Effort()
        n = self.sys.n
        verdicts: dict = {}
        maps = []
        for i in range(n):
            arr = []
            for gid, g in enumerate(self.elements):
                delta = self.inv_col[gid][i]
                v = verdicts.get(delta)
                if v is None:
                    v = in_RL(self.sys, L, delta, effort)
                    verdicts[delta] = v
                if v == UNKNOWN:
                    raise OracleUndecided(delta, "undecided root in finite sweep")
                arr.append(gid if v == YES else self.left[i][gid])
            maps.append(arr)
        return maps

    def sweep(self, maps, word):
        """Image of the whole group under the toggle word; returns ids."""
        ids = list(range(len(self.elements)))
        for i in word:
            arr = maps[i]
            ids = [arr[x] for x in ids]
        return set(ids)


def sort_check(sys: CoxeterSystem, L: ConvexSet, word, table: FiniteToggleTable | None = None, effort: Effort | None = None) -> bool:
    """Whether applying the toggle word to every element lands exactly on L."""
    if not is_finite(sys):
        raise ValueError("sort_check requires a finite group")
    if L.kind != "hull":
        raise ValueError("sort_check requires a hull presentation")
    table = table or FiniteToggleTable(sys)
    maps = table.toggle_maps(L, effort)
    image = table.sweep(maps, word)
    target = {table.index[g] for g in L.expanded()}
    return image == target


# -- bounded heaviness --------------------------------------------------


@dataclass
class HeavinessVerdict:
    kind: str                      # "not_heavy" | "heavy_up_to_bound" | "inconclusive"
    witness: GroupElement | None = None
    period: int | None = None
    detail: str = ""

    def to_json(self, sys: CoxeterSystem) -> dict:
        out = {"verdict": self.kind, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = word_to_json(reduced_word(self.witness), sys)
        if self.period is not None:
            out["period"] = self.period
        return out


def _periodic_cycle(sys, L, ordering, u, effort, sep, max_passes):
    """Follow full passes from u; if a cycle inside the stratum appears,
    return its elements, else None (the trajectory left the stratum)."""
    seq = [u]
    pos = {u: 0}
    w = u
    for _ in range(max_passes):
        w = pro_c(sys, L, ordering, w, effort)
        if w in pos:
            return seq[pos[w]:]
        cur = separators(sys, L, w, effort)
        if not cur.complete:
            raise OracleUndecided(None, "separator set undecided during orbit check")
        if cur.roots != sep:
            return None
        pos[w] = len(seq)
        seq.append(w)
    return None


def is_heavy_bounded(sys: CoxeterSystem, L: ConvexSet, ordering, effort: Effort | None = None, radius: int | None = None) -> HeavinessVerdict:
    """Search for a periodic toggle orbit outside L among all strata met
    within a Cayley ball around the hull; verdicts are explicitly bounded."""
    effort = effort or Effort()
    if L.kind != "hull":
        raise ValueError("bounded heaviness decision requires a hull presentation")
    ordering = tuple(ordering)
    radius = effort.search_radius if radius is None else radius
    hull = set(L.expanded())
    seeds = list(hull) + [identity(sys)]
    seen = set(seeds)
    frontier = list(seeds)
    for _ in range(radius):
        nxt = []
        for g in frontier:
            for i in range(sys.n):
                h = g.left_mul_gen(i)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    seeds = list(seen)

    inconclusive = []
    strata = []
    covered = set()
    for u in sorted(seeds, key=lambda g: (len(reduced_word(g)), reduced_word(g))):
        if u in covered:
            continue
        st = stratum_of(sys, L, u, effort=effort)
        covered |= st.members
        if not st.complete:
            inconclusive.append(st)
            continue
        if st.separator and not any(
            st.separator == s.separator and tau_equivalent(sys, L, st.members, s.members, effort)
            for s in strata
        ):
            strata.append(st)

    for st in strata:
        max_passes = len(st.members) + 1
        for u in st.members:
            try:
                cycle = _periodic_cycle(sys, L, ordering, u, effort, st.separator, max_passes)
            except OracleUndecided as exc:
                return HeavinessVerdict("inconclusive", detail=str(exc))
            if cycle:
                for w in cycle:
                    if w not in hull:
                        return HeavinessVerdict(
                            "not_heavy", witness=w, period=len(cycle),
                            detail="periodic orbit outside the convex set",
                        )
    if inconclusive:
        return HeavinessVerdict(
            "inconclusive",
            detail=f"{len(inconclusive)} stratum searches hit the cap",
        )
    return HeavinessVerdict(
        "heavy_up_to_bound",
        detail=f"all strata within radius {radius} searched completely",
    )
