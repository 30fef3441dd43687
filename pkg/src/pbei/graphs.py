"""Simple undirected graphs: construction, shape detection, purity classifier.

Vertices are labelled 1..n.  The descriptor grammar used by the CLI and the
service is

    path:N  cycle:N  kbip:M,N  complete:N  edges:a-b,c-d,...  union:(s)+(s)

and the JSON form is {"n": n, "edges": [[a, b], ...]}.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        for e in self.edges:
            a, b = e
            if a == b:
                raise ValueError(f"loop at vertex {a}")
            if a >= b:
                raise ValueError(f"edge {e} not normalised (want a < b)")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge {e} out of range 1..{self.n}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for a, b in self.edges if v in (a, b))

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in self.edges

    def isolated_vertices(self) -> tuple[int, ...]:
        touched = {v for e in self.edges for v in e}
        return tuple(v for v in range(1, self.n + 1) if v not in touched)

    def to_spec(self) -> str:
        if not self.edges:
            return f"edges: (none, n={self.n})"
        body = ",".join(f"{a}-{b}" for a, b in sorted(self.edges))
        return f"edges:{body}"

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={sorted(self.edges)})"


def _edge(a: int, b: int) -> Edge:
    if a == b:
        raise ValueError(f"loop at vertex {a}")
    return (a, b) if a < b else (b, a)


def graph(n: int, edges) -> Graph:
    return Graph(n, frozenset(_edge(a, b) for a, b in edges))


# ---------------------------------------------------------------------------
# constructors


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return graph(n, [(i, i + 1) for i in range(1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return graph(n, itertools.combinations(range(1, n + 1), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise ValueError("complete bipartite graph needs m, n >= 1")
    return graph(m + n, [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)])


def from_edge_list(pairs, n: int | None = None) -> Graph:
    pairs = [tuple(e) for e in pairs]
    hi = max((max(e) for e in pairs), default=0)
    if n is None:
        n = hi if hi else 1
    if hi > n:
        raise ValueError(f"edge endpoint {hi} exceeds n={n}")
    return graph(n, pairs)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Keep a's labels, shift b's labels up by a.n."""
    shifted = [(u + a.n, v + a.n) for u, v in b.edges]
    return graph(a.n + b.n, list(a.edges) + shifted)


# ---------------------------------------------------------------------------
# descriptor parsing


def parse_graph(spec) -> Graph:
    if isinstance(spec, dict):
        return from_edge_list(spec.get("edges", []), n=int(spec["n"]))
    if not isinstance(spec, str):
        raise ValueError(f"unsupported graph descriptor {spec!r}")
    text = spec.strip()
    if not text:
        raise ValueError("empty graph descriptor")
    head, sep, rest = text.partition(":")
    head = head.strip()
    if not sep:
        raise ValueError(f"malformed descriptor {spec!r}")
    if head == "path":
        return path(_int(rest, spec))
    if head == "cycle":
        return cycle(_int(rest, spec))
    if head == "complete":
        return complete(_int(rest, spec))
    if head == "kbip":
        parts = rest.split(",")
        if len(parts) != 2:
            raise ValueError(f"kbip needs M,N in {spec!r}")
        return complete_bipartite(_int(parts[0], spec), _int(parts[1], spec))
    if head == "edges":
        pairs = []
        for chunk in rest.split(","):
            chunk = chunk.strip()
            a, sep2, b = chunk.partition("-")
            if not sep2:
                raise ValueError(f"bad edge {chunk!r} in {spec!r}")
            pairs.append((_int(a, spec), _int(b, spec)))
        return from_edge_list(pairs)
    if head == "union":
        return _parse_union(rest, spec)
    raise ValueError(f"unknown descriptor kind {head!r}")


def _int(s: str, spec) -> int:
    try:
        return int(s.strip())
    except ValueError:
        raise ValueError(f"bad integer {s!r} in descriptor {spec!r}") from None


def _parse_union(body: str, spec) -> Graph:
    """Parse "(spec)+(spec)" with arbitrarily nested parentheses."""
    parts = []
    depth = 0
    start = None
    for i, ch in enumerate(body):
        if ch == "(":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced parens in {spec!r}")
            if depth == 0:
                parts.append(body[start:i])
        elif depth == 0 and ch not in "+ ":
            raise ValueError(f"malformed union in {spec!r}")
    if depth != 0 or len(parts) < 2:
        raise ValueError(f"union needs at least two (spec) operands in {spec!r}")
    out = parse_graph(parts[0])
    for part in parts[1:]:
        out = disjoint_union(out, parse_graph(part))
    return out


# ---------------------------------------------------------------------------
# decomposition


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced on the given vertices, relabelled 1..|S| in sorted order."""
    vs = sorted(set(vertices))
    if not vs:
        raise ValueError("empty vertex set")
    for v in vs:
        if not 1 <= v <= g.n:
            raise ValueError(f"vertex {v} out of range")
    index = {v: i + 1 for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [(index[a], index[b]) for a, b in g.edges if a in keep and b in keep]
    return graph(len(vs), edges)


def connected_components(g: Graph) -> list[Graph]:
    """Components as relabelled graphs, ordered by smallest original vertex."""
    seen: set[int] = set()
    comps: list[list[int]] = []
    for start in range(1, g.n + 1):
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return [induced_subgraph(g, comp) for comp in comps]


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """2-colouring (per component, first vertex coloured 0), or None if odd cycle."""
    color: dict[int, int] = {}
    for start in range(1, g.n + 1):
        if start in color:
            continue
        color[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    side0 = tuple(v for v in range(1, g.n + 1) if color[v] == 0)
    side1 = tuple(v for v in range(1, g.n + 1) if color[v] == 1)
    return side0, side1


# ---------------------------------------------------------------------------
# shape detection and the purity classifier

PATH = "path"
ODD_CYCLE = "odd_cycle"
EVEN_CYCLE = "even_cycle"
COMPLETE_BIPARTITE = "complete_bipartite"
COMPLETE = "complete"
OTHER = "other"


@dataclass(frozen=True)
class GraphShape:
    tag: str
    witness: tuple = ()

    def describe(self) -> str:
        if self.tag == COMPLETE_BIPARTITE:
            m, n = self.witness[0], self.witness[1]
            return f"complete bipartite K_{{{len(m)},{len(n)}}}"
        if self.tag == PATH:
            return "path"
        if self.tag == ODD_CYCLE:
            return "odd cycle"
        if self.tag == EVEN_CYCLE:
            return "even cycle"
        if self.tag == COMPLETE:
            return "complete graph"
        return "unclassified shape"


def detect_shape(g: Graph) -> GraphShape:
    """Classify a connected graph.  Precedence: path, then odd cycle, then
    complete bipartite, then even cycle, then complete; so K_{1,1} and
    K_{1,2} come out as paths and C_4 as K_{2,2}."""
    if not is_connected(g):
        raise ValueError("detect_shape needs a connected graph")
    degs = [g.degree(v) for v in range(1, g.n + 1)]
    is_cycle = g.m == g.n and all(d == 2 for d in degs)
    if g.m == g.n - 1 and all(d <= 2 for d in degs):
        order = _path_order(g)
        return GraphShape(PATH, (tuple(order),))
    if is_cycle and g.n % 2:
        return GraphShape(ODD_CYCLE, (tuple(_cycle_order(g)),))
    parts = bipartition(g)
    if parts is not None:
        a, b = parts
        if g.m == len(a) * len(b):
            return GraphShape(COMPLETE_BIPARTITE, (a, b))
    if is_cycle:
        return GraphShape(EVEN_CYCLE, (tuple(_cycle_order(g)),))
    if g.m == g.n * (g.n - 1) // 2:
        return GraphShape(COMPLETE, ())
    return GraphShape(OTHER, ())


def _path_order(g: Graph) -> list[int]:
    if g.n == 1:
        return [1]
    ends = [v for v in range(1, g.n + 1) if g.degree(v) == 1]
    v = min(ends)
    order = [v]
    prev = None
    while len(order) < g.n:
        nxt = [w for w in g.neighbors(v) if w != prev]
        prev, v = v, nxt[0]
        order.append(v)
    return order


def _cycle_order(g: Graph) -> list[int]:
    v = 1
    order = [v]
    prev = None
    while len(order) < g.n:
        nxt = sorted(w for w in g.neighbors(v) if w != prev)
        prev, v = v, nxt[0]
        order.append(v)
    return order


@dataclass(frozen=True)
class Classification:
    pure: bool
    reason: str
    stripped_isolated: tuple[int, ...] = ()


def classify_pure(g: Graph) -> Classification:
    """Predict whether the parity ideal's resolution is pure: yes exactly when
    the graph (isolated vertices stripped) is connected complete bipartite or
    every component is a path or an odd cycle."""
    stripped = g.isolated_vertices()
    if stripped:
        rest = [v for v in range(1, g.n + 1) if v not in stripped]
        if not rest:
            return Classification(True, "edgeless graph (zero ideal)", stripped)
        g = induced_subgraph(g, rest)
    comps = [detect_shape(c) for c in connected_components(g)]
    if len(comps) == 1 and comps[0].tag in (PATH, ODD_CYCLE, COMPLETE_BIPARTITE, COMPLETE):
        shape = comps[0]
        if shape.tag == PATH:
            return Classification(True, "path graph", stripped)
        if shape.tag == ODD_CYCLE:
            return Classification(True, "odd cycle", stripped)
        if shape.tag == COMPLETE_BIPARTITE:
            return Classification(True, shape.describe(), stripped)
        # complete graphs: K_3 is an odd cycle (caught above); larger are impure
    bad = [s for s in comps if s.tag not in (PATH, ODD_CYCLE)]
    if not bad:
        return Classification(True, "disjoint union of paths and odd cycles", stripped)
    if len(comps) == 1:
        detail = ""
        if bad[0].tag in (EVEN_CYCLE, COMPLETE):
            detail = f" ({bad[0].describe()})"
        return Classification(
            False,
            "connected graph is not a path, an odd cycle or a complete "
            f"bipartite graph{detail}",
            stripped,
        )
    return Classification(
        False,
        f"component that is a {bad[0].describe()} is not a path or odd cycle "
        "and is not the only component",
        stripped,
    )


# ---------------------------------------------------------------------------
# canonical forms and enumeration


def _pair_slots(n: int) -> list[Edge]:
    return list(itertools.combinations(range(1, n + 1), 2))


@lru_cache(maxsize=8)
def _perm_slot_maps(n: int) -> list[tuple[int, ...]]:
    """For each permutation of 1..n, where each pair slot lands."""
    slots = _pair_slots(n)
    slot_index = {e: i for i, e in enumerate(slots)}
    maps = []
    for perm in itertools.permutations(range(1, n + 1)):
        img = tuple(
            slot_index[_edge(perm[a - 1], perm[b - 1])] for a, b in slots
        )
        maps.append(img)
    return maps


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Lexicographically minimal adjacency bitstring over all relabelings."""
    slots = _pair_slots(g.n)
    bits = tuple(1 if e in g.edges else 0 for e in slots)
    best = bits
    for slot_map in _perm_slot_maps(g.n):
        cand = tuple(bits[slot_map[i]] for i in range(len(slots)))
        if cand < best:
            best = cand
    return (g.n,) + best


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_form(a) == canonical_form(b)


def automorphisms(g: Graph) -> list[tuple[int, ...]]:
    """All vertex permutations preserving the edge set (1-based images)."""
    out = []
    for perm in itertools.permutations(range(1, g.n + 1)):
        if all(_edge(perm[a - 1], perm[b - 1]) in g.edges for a, b in g.edges):
            out.append(perm)
    return out


def enumerate_connected(n: int) -> list[Graph]:
    """One representative per isomorphism class of connected graphs on n vertices."""
    if not 1 <= n <= 6:
        raise ValueError("enumeration supported for 1 <= n <= 6")
    slots = _pair_slots(n)
    seen: set[tuple[int, ...]] = set()
    out: list[Graph] = []
    for mask in range(1 << len(slots)):
        edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
        g = Graph(n, frozenset(edges))
        if n > 1 and not is_connected(g):
            continue
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    out.sort(key=lambda g: (g.m, canonical_form(g)))
    return out
