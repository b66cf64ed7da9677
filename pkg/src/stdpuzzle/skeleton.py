"""The skeleton model: order digraphs behind piece families.

A basic skeleton is a digraph on the four window corners

    a = top-left,  b = bottom-left,  c = top-right,  d = bottom-right

that is acyclic and in which any two directed paths between the same pair
of vertices have equal length (i.e. it is the Hasse diagram of its
transitive closure).  An edge u -> v asserts label(v) > label(u).  The
pieces whose grids extend the skeleton's partial order form a "simple
piece"; skeletons are classified 1..4 by the orientation of the two
column relations.  Concatenating a basic skeleton across a 2x(n+1) grid
gives the puzzle's order poset, whose linear extensions are exactly the
supported puzzles.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .pieces import PIECES, Support

BASIC_VERTICES = ("a", "b", "c", "d")


@dataclass(frozen=True)
class SkeletonGraph:
    """A finite digraph with labeled vertices; edges are (tail, head) pairs."""

    vertices: tuple
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        vs = set(self.vertices)
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u!r}, {v!r}) leaves the vertex set")

    def successors(self, u):
        return [v for (x, v) in self.edges if x == u]

    def closure(self) -> frozenset:
        """Transitive closure as a set of ordered pairs (via nonempty paths)."""
        reach = {v: set(self.successors(v)) for v in self.vertices}
        changed = True
        while changed:
            changed = False
            for u in self.vertices:
                extra = set()
                for v in reach[u]:
                    extra |= reach.get(v, set())
                if not extra <= reach[u]:
                    reach[u] |= extra
                    changed = True
        return frozenset((u, v) for u, vs in reach.items() for v in vs)

    def is_acyclic(self) -> bool:
        return all(u != v for u, v in self.closure())


def basic_skeleton(edges) -> SkeletonGraph:
    """A skeleton candidate on the four canonical corner vertices."""
    return SkeletonGraph(BASIC_VERTICES, frozenset(edges))


def _all_paths(g: SkeletonGraph, src, dst) -> list[int]:
    """Lengths of every directed path src -> dst (graph assumed acyclic)."""
    out: list[int] = []

    def walk(u, length):
        if u == dst and length:
            out.append(length)
            return
        for v in g.successors(u):
            walk(v, length + 1)

    walk(src, 0)
    return out


def validate_basic(g: SkeletonGraph) -> bool:
    """Acyclic, and all directed paths between any vertex pair share a length."""
    if len(g.vertices) != 4:
        raise ValueError("a basic skeleton has exactly four vertices")
    if not g.is_acyclic():
        return False
    for src in g.vertices:
        for dst in g.vertices:
            if src is dst or src == dst:
                continue
            lengths = _all_paths(g, src, dst)
            if len(set(lengths)) > 1:
                return False
    return True


def classify(g: SkeletonGraph):
    """Class 1..4 from the orientation of the a-b and c-d relations, else None."""
    if not validate_basic(g):
        raise ValueError("not a valid basic skeleton")
    reach = g.closure()
    left_up = ("b", "a") in reach     # bottom-left below top-left
    left_down = ("a", "b") in reach
    right_up = ("d", "c") in reach
    right_down = ("c", "d") in reach
    if left_up and right_up:
        return 1
    if left_up and right_down:
        return 2
    if left_down and right_up:
        return 3
    if left_down and right_down:
        return 4
    return None


def simple_piece(g: SkeletonGraph) -> Support:
    """The pieces whose corner values extend the skeleton's partial order."""
    if not validate_basic(g):
        raise ValueError("not a valid basic skeleton")
    closure = g.closure()
    members = set()
    for p in PIECES:
        val = {"a": p.tl, "b": p.bl, "c": p.tr, "d": p.br}
        if all(val[v] > val[u] for u, v in closure):
            members.add(p)
    return Support(frozenset(members))


def _candidate_edges():
    return [(u, v) for u in BASIC_VERTICES for v in BASIC_VERTICES if u != v]


@lru_cache(maxsize=None)
def _skeletons_by_class() -> dict:
    """class -> {simple piece support: generating basic skeleton}."""
    slots = _candidate_edges()
    by_class: dict = {1: {}, 2: {}, 3: {}, 4: {}}
    for bits in range(1 << len(slots)):
        edges = frozenset(e for i, e in enumerate(slots) if bits >> i & 1)
        g = basic_skeleton(edges)
        if not validate_basic(g):
            continue
        cls = classify(g)
        if cls is None:
            continue
        support = simple_piece(g)
        # Distinct valid skeletons have distinct closures, hence distinct
        # supports; keep the first (only) generator seen.
        by_class[cls].setdefault(support, g)
    return by_class


def all_simple_pieces(class_i: int) -> list[Support]:
    """The distinct i-simple pieces, in canonical support order."""
    if class_i not in (1, 2, 3, 4):
        raise ValueError("class must be 1..4")
    return sorted(_skeletons_by_class()[class_i], key=lambda s: str(s))


def generating_skeleton(support: Support) -> SkeletonGraph:
    """The basic skeleton whose simple piece equals the given support."""
    for cls in (1, 2, 3, 4):
        got = _skeletons_by_class()[cls].get(support)
        if got is not None:
            return got
    raise ValueError(f"no generating basic skeleton for {support}")


def puzzle_skeleton(support: Support, n: int) -> SkeletonGraph:
    """The basic skeleton concatenated across a 2x(n+1) grid."""
    if n < 1:
        raise ValueError("puzzles need n >= 1 pieces")
    g = generating_skeleton(support)
    vertices = tuple(f"t{j}" for j in range(1, n + 2)) + \
        tuple(f"b{j}" for j in range(1, n + 2))
    edges = set()
    for k in range(1, n + 1):
        cell = {"a": f"t{k}", "b": f"b{k}", "c": f"t{k + 1}", "d": f"b{k + 1}"}
        for u, v in g.edges:
            edges.add((cell[u], cell[v]))
    return SkeletonGraph(vertices, frozenset(edges))


def drawn_edge_count(support: Support) -> int:
    """Edge count of the figure-style drawing of a simple piece's skeleton:
    both column edges are always drawn, plus the cross covers of the order.

    The generating Hasse diagram may omit a column edge implied by a longer
    chain; this statistic matches how the 20 families are usually pictured.
    """
    g = generating_skeleton(support)
    closure = g.closure()
    columns = {frozenset(("a", "b")), frozenset(("c", "d"))}
    cross_covers = 0
    for u, v in closure:
        if frozenset((u, v)) in columns:
            continue
        if not any((u, w) in closure and (w, v) in closure
                   for w in BASIC_VERTICES if w not in (u, v)):
            cross_covers += 1
    return 2 + cross_covers


def count_linear_extensions(g: SkeletonGraph, bound: int = 16) -> int:
    """Exact number of linear extensions, by DP over order ideals."""
    n = len(g.vertices)
    if n > bound:
        raise ValueError(f"{n} vertices exceeds the extension-count bound {bound}")
    index = {v: i for i, v in enumerate(g.vertices)}
    preds = [0] * n
    for u, v in g.edges:
        preds[index[v]] |= 1 << index[u]
    full = (1 << n) - 1
    memo = {full: 1}

    def rec(placed: int) -> int:
        got = memo.get(placed)
        if got is not None:
            return got
        total = 0
        for i in range(n):
            bit = 1 << i
            if not placed & bit and preds[i] & ~placed == 0:
                total += rec(placed | bit)
        memo[placed] = total
        return total

    return rec(0)


def export_dot(g: SkeletonGraph, name: str = "skeleton") -> str:
    """Graphviz DOT text, vertices in canonical order."""
    lines = [f"digraph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for u, v in sorted(g.edges, key=lambda e: (str(e[0]), str(e[1]))):
        lines.append(f'  "{u}" -> "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
