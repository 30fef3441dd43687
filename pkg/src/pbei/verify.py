"""Theorem-level verification: replay of the supporting computations and an
exhaustive classifier-vs-computation sweep over small connected graphs.

The four-vertex fixtures follow one labelling throughout: the claw is centred
at vertex 2, and its edge-disjoint partners (triangle on {1,3,4}, the path
1-4-3, the single edge 1-3) combine with it to K4, the diamond and the paw.
"""

from __future__ import annotations

import concurrent.futures
import os
from dataclasses import dataclass, field

from .algebra import DEFAULT_PRIME
from .betti import BettiTable, koszul_betti, tensor_betti
from .graphs import (
    COMPLETE_BIPARTITE,
    PATH,
    Graph,
    automorphisms,
    classify_pure,
    complete,
    complete_bipartite,
    connected_components,
    cycle,
    detect_shape,
    disjoint_union,
    enumerate_connected,
    from_edge_list,
    induced_subgraph,
    path,
)
from .groebner import ideal_intersection, ideal_sum, min_generator_degrees
from .ideals import parity_ideal


# ---------------------------------------------------------------------------
# fixtures

CLAW_AT_2 = from_edge_list([(1, 2), (2, 3), (2, 4)], n=4)
TRIANGLE_134 = from_edge_list([(1, 3), (1, 4), (3, 4)], n=4)
PATH_143 = from_edge_list([(1, 4), (3, 4)], n=4)
EDGE_13 = from_edge_list([(1, 3)], n=4)

CASE_GRAPHS: dict[str, Graph] = {
    "claw": CLAW_AT_2,
    "k4": complete(4),
    "diamond": from_edge_list([(1, 2), (2, 3), (2, 4), (1, 4), (3, 4)], n=4),
    "paw": from_edge_list([(1, 2), (2, 3), (2, 4), (1, 3)], n=4),
    "chair": from_edge_list([(1, 2), (2, 3), (3, 4), (2, 5)], n=5),
    "banner": from_edge_list([(1, 2), (2, 3), (3, 4), (2, 5), (4, 5)], n=5),
    "banner_chord": from_edge_list([(1, 2), (2, 3), (3, 4), (2, 5), (4, 5), (1, 4)], n=5),
}

# (target, edge-disjoint partner) pairs whose ideals sum to the target's
DECOMPOSITIONS: list[tuple[str, str, Graph]] = [
    ("k4", "triangle", TRIANGLE_134),
    ("diamond", "path", PATH_143),
    ("paw", "edge", EDGE_13),
]

DISCONNECTED_SPOTS: list[tuple[str, Graph]] = [
    ("union(path:2)+(cycle:3)", disjoint_union(path(2), cycle(3))),
    ("union(kbip:1,3)+(path:2)", disjoint_union(complete_bipartite(1, 3), path(2))),
]


def _betti(g: Graph, i_max: int, j_max: int, p: int) -> BettiTable:
    return koszul_betti(
        parity_ideal(g, p), i_max, j_max, vertex_symmetries=automorphisms(g)
    )


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    title: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name, bool(passed), detail))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        lines = [f"== {self.title}"]
        for c in self.checks:
            mark = "ok  " if c.passed else "FAIL"
            detail = f"  [{c.detail}]" if c.detail else ""
            lines.append(f"  {mark} {c.name}{detail}")
        lines.append(f"  -- {sum(c.passed for c in self.checks)}/{len(self.checks)} passed")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


# ---------------------------------------------------------------------------
# lemma replays


def verify_lemmas(p: int = DEFAULT_PRIME) -> Report:
    """Check the zero/nonzero Betti claims and intersection degree bounds that
    feed the purity classification."""
    rep = Report("supporting computations")

    t_c3 = _betti(cycle(3), 4, 6, p)
    t_p4 = _betti(path(4), 4, 6, p)
    rep.add(
        "triangle: complete-intersection table has beta(3,6) = 1",
        t_c3.get(3, 6) == 1,
        f"beta(3,6) = {t_c3.get(3, 6)}",
    )
    rep.add(
        "4-path: complete-intersection table has beta(3,6) = 1",
        t_p4.get(3, 6) == 1,
        f"beta(3,6) = {t_p4.get(3, 6)}",
    )

    t_k22 = _betti(complete_bipartite(2, 2), 4, 6, p)
    t_k13 = _betti(complete_bipartite(1, 3), 4, 6, p)
    t_p3 = _betti(path(3), 4, 6, p)
    t_p2 = _betti(path(2), 4, 6, p)
    for name, val in [
        ("K_{2,2}: beta(3,5) > 0", t_k22.get(3, 5) > 0),
        ("K_{1,3}: beta(3,5) > 0", t_k13.get(3, 5) > 0),
        ("triangle: beta(3,5) = 0", t_c3.get(3, 5) == 0),
        ("4-path: beta(3,5) = 0", t_p4.get(3, 5) == 0),
        ("3-path: beta(3,5) = 0", t_p3.get(3, 5) == 0),
        ("2-path: beta(3,5) = 0", t_p2.get(3, 5) == 0),
        ("K_{1,3}: beta(2,5) = 0", t_k13.get(2, 5) == 0),
        ("triangle: beta(2,5) = 0", t_c3.get(2, 5) == 0),
        ("3-path: beta(2,5) = 0", t_p3.get(2, 5) == 0),
        ("2-path: beta(2,5) = 0", t_p2.get(2, 5) == 0),
    ]:
        rep.add(name, val)

    claw = parity_ideal(CLAW_AT_2, p)
    for name, partner in [
        ("triangle", TRIANGLE_134),
        ("3-path", PATH_143),
        ("2-path", EDGE_13),
    ]:
        inter = ideal_intersection(parity_ideal(partner, p), claw)
        degs = min_generator_degrees(inter)
        rep.add(
            f"claw ∩ {name}: generated in degree >= 4",
            bool(degs) and min(degs) >= 4,
            f"degrees {sorted(set(degs))}",
        )
        t_int = koszul_betti(inter, 4, 6)
        rep.add(
            f"claw ∩ {name}: beta(3,5) = 0",
            t_int.get(3, 5) == 0,
            f"beta(3,5) = {t_int.get(3, 5)}",
        )
    return rep


def verify_exact_sequences(p: int = DEFAULT_PRIME) -> Report:
    """Replay the three additivity identities linking each case graph to its
    edge-disjoint claw decomposition."""
    rep = Report("exact-sequence identities")
    claw = parity_ideal(CLAW_AT_2, p)
    t_claw = koszul_betti(claw, 3, 6)
    for target, partner_name, partner in DECOMPOSITIONS:
        whole = parity_ideal(CASE_GRAPHS[target], p)
        part = parity_ideal(partner, p)
        rep.add(
            f"{target}: claw ideal + {partner_name} ideal equals whole ideal",
            ideal_sum(part, claw).same_ideal(whole),
        )
        t_whole = koszul_betti(whole, 3, 6, vertex_symmetries=automorphisms(CASE_GRAPHS[target]))
        t_part = koszul_betti(part, 3, 6)
        t_int = koszul_betti(ideal_intersection(part, claw), 3, 6)
        lhs = t_whole.get(3, 5)
        rhs = t_part.get(3, 5) + t_claw.get(3, 5) + t_int.get(2, 5)
        rep.add(
            f"{target}: beta(3,5) = beta(3,5)({partner_name}) + beta(3,5)(claw) + beta(2,5)(∩)",
            lhs == rhs,
            f"{lhs} = {t_part.get(3, 5)} + {t_claw.get(3, 5)} + {t_int.get(2, 5)}",
        )
        rep.add(f"{target}: beta(3,5) > 0", lhs > 0, f"beta(3,5) = {lhs}")
        rep.add(
            f"{target}: beta(3,6) > 0",
            t_whole.get(3, 6) > 0,
            f"beta(3,6) = {t_whole.get(3, 6)}",
        )
    return rep


def _shortest_odd_cycle(g: Graph) -> int | None:
    """Length of a shortest odd closed walk = shortest odd cycle, via BFS on
    the bipartite double cover."""
    best = None
    for s in range(1, g.n + 1):
        dist = {(s, 0): 0}
        frontier = [(s, 0)]
        while frontier:
            nxt = []
            for v, par in frontier:
                for w in g.neighbors(v):
                    key = (w, 1 - par)
                    if key not in dist:
                        dist[key] = dist[(v, par)] + 1
                        nxt.append(key)
            frontier = nxt
        if (s, 1) in dist:
            ln = dist[(s, 1)]
            if best is None or ln < best:
                best = ln
    return best


def verify_case_graphs(p: int = DEFAULT_PRIME) -> Report:
    rep = Report("case graphs")

    t_claw = _betti(CASE_GRAPHS["claw"], 4, 8, p)
    v = t_claw.purity()
    rep.add("claw: pure resolution", v.pure, v.describe())

    for name in ("k4", "diamond", "paw"):
        t = _betti(CASE_GRAPHS[name], 3, 6, p)
        v = t.purity()
        witnessed = (3, 5) in dict.fromkeys(v.witnesses) and (3, 6) in dict.fromkeys(v.witnesses)
        rep.add(
            f"{name}: impure with witnesses (3,5),(3,6)",
            (not v.pure) and witnessed,
            v.describe(),
        )

    # chair contains claw and 4-path; banner contains K_{2,2} and 4-path
    chair = CASE_GRAPHS["chair"]
    chair_claw = detect_shape(induced_subgraph(chair, (1, 2, 3, 5)))
    chair_path = detect_shape(induced_subgraph(chair, (1, 2, 3, 4)))
    rep.add(
        "chair: induced claw and induced 4-path present",
        chair_claw.tag == COMPLETE_BIPARTITE
        and sorted(len(side) for side in chair_claw.witness) == [1, 3]
        and chair_path.tag == PATH,
    )
    banner = CASE_GRAPHS["banner"]
    banner_c4 = detect_shape(induced_subgraph(banner, (2, 3, 4, 5)))
    banner_path = detect_shape(induced_subgraph(banner, (1, 2, 3, 4)))
    rep.add(
        "banner: induced 4-cycle and induced 4-path present",
        banner_c4.tag == COMPLETE_BIPARTITE
        and sorted(len(side) for side in banner_c4.witness) == [2, 2]
        and banner_path.tag == PATH,
    )
    for name in ("chair", "banner"):
        t = _betti(CASE_GRAPHS[name], 3, 6, p)
        rep.add(
            f"{name}: beta(3,5) > 0 and beta(3,6) > 0",
            t.get(3, 5) > 0 and t.get(3, 6) > 0,
            f"beta(3,5) = {t.get(3, 5)}, beta(3,6) = {t.get(3, 6)}",
        )

    # a chord across an odd cycle leaves a strictly shorter odd cycle
    for length in (5, 7, 9):
        g = cycle(length)
        chorded = from_edge_list(sorted(g.edges) + [(1, 4)], n=length)
        short = _shortest_odd_cycle(chorded)
        rep.add(
            f"chord on a {length}-cycle yields a shorter odd cycle",
            short is not None and short < length,
            f"shortest odd cycle {short}",
        )
    return rep


# ---------------------------------------------------------------------------
# sweep


@dataclass(frozen=True)
class SweepRecord:
    spec: str
    n: int
    predicted: bool
    reason: str
    computed_pure: bool
    window: tuple[int, int]
    witnesses: tuple[tuple[int, int], ...]
    agree: bool
    entries: tuple[tuple[int, int, int], ...] = ()

    def to_json(self) -> dict:
        out = {
            "graph": self.spec,
            "predicted": self.predicted,
            "computed": "window-bounded" if self.computed_pure else False,
            "window": list(self.window),
            "witnesses": [list(w) for w in self.witnesses],
        }
        if not self.agree:
            out["betti"] = [list(e) for e in self.entries]
        return out


@dataclass
class SweepReport:
    n_max: int
    window: tuple[int, int]
    prime: int
    records: list[SweepRecord] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def agreements(self) -> int:
        return sum(r.agree for r in self.records)

    @property
    def ok(self) -> bool:
        return self.agreements == self.total

    def render(self) -> str:
        lines = [
            f"== purity sweep: n <= {self.n_max}, window {self.window}, p = {self.prime}"
        ]
        for r in self.records:
            mark = "ok  " if r.agree else "DISAGREE"
            comp = "pure (within window)" if r.computed_pure else "impure"
            wit = (
                " witnesses " + ",".join(f"({i},{j})" for i, j in r.witnesses)
                if r.witnesses
                else ""
            )
            lines.append(
                f"  {mark} {r.spec}: predicted {'pure' if r.predicted else 'impure'}"
                f" ({r.reason}); computed {comp}{wit}"
            )
            if not r.agree:
                lines.append(f"       betti entries: {list(r.entries)}")
        lines.append(f"  -- agreement {self.agreements}/{self.total}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "window": list(self.window),
            "prime": self.prime,
            "agreement": [self.agreements, self.total],
            "records": [r.to_json() for r in self.records],
        }


def _graph_window(n: int, window: tuple[int, int]) -> tuple[int, int]:
    """Clamp the requested window to the 2n-variable ring: i <= 2n, j <= 2n+4."""
    i_max = min(2 * n, window[0])
    j_max = min(2 * n + 4, window[1])
    return i_max, max(i_max, j_max)


def _sweep_one(args) -> SweepRecord:
    g, window, p = args
    verdict = classify_pure(g)
    w = _graph_window(g.n, window)
    table = _betti(g, w[0], w[1], p)
    purity = table.purity()
    agree = verdict.pure == purity.pure
    return SweepRecord(
        spec=g.to_spec(),
        n=g.n,
        predicted=verdict.pure,
        reason=verdict.reason,
        computed_pure=purity.pure,
        window=w,
        witnesses=purity.witnesses,
        agree=agree,
        entries=tuple(table.nonzero()) if not agree else (),
    )


def _spot_record(spec: str, g: Graph, window: tuple[int, int], p: int) -> SweepRecord:
    """Disconnected spot check: table assembled from component tables."""
    verdict = classify_pure(g)
    comps = connected_components(g)
    windows = [_graph_window(comp.n, window) for comp in comps]
    target = (min(w[0] for w in windows), min(w[1] for w in windows))
    table: BettiTable | None = None
    for comp in comps:
        t = _betti(comp, target[0], target[1], p)
        table = t if table is None else tensor_betti(table, t)
    purity = table.purity()
    agree = verdict.pure == purity.pure
    return SweepRecord(
        spec=spec,
        n=g.n,
        predicted=verdict.pure,
        reason=verdict.reason,
        computed_pure=purity.pure,
        window=table.window,
        witnesses=purity.witnesses,
        agree=agree,
        entries=tuple(table.nonzero()) if not agree else (),
    )


def sweep(
    n_max: int,
    window: tuple[int, int] = (8, 12),
    p: int = DEFAULT_PRIME,
    jobs: int = 1,
    spot_checks: bool = True,
) -> SweepReport:
    """Compare the structural classifier with computed purity on every
    connected isomorphism class with at most n_max vertices."""
    report = SweepReport(n_max=n_max, window=window, prime=p)
    graphs: list[Graph] = []
    for n in range(1, n_max + 1):
        graphs.extend(enumerate_connected(n))
    tasks = [(g, window, p) for g in graphs]
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs > 1 and len(tasks) > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            report.records.extend(pool.map(_sweep_one, tasks))
    else:
        report.records.extend(_sweep_one(t) for t in tasks)
    if spot_checks:
        for spec, g in DISCONNECTED_SPOTS:
            report.records.append(_spot_record(spec, g, window, p))
    return report
