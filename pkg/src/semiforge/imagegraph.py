"""The directed labelled graph of rank-r image subspaces.

Vertices are the images of rank-r words, edges (V, a, im a) exist exactly
when V meets ker a trivially (tested through the exterior-algebra
embedding). Since the edge label determines the edge target, the graph is
stored as per-vertex letter maps. SCC indices are assigned in reverse
topological order of the condensation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .exterior import trivial_intersection
from .linalg import Mat, Subspace, image, kernel, rank
from .semigroup import MorphismTable, Word


class MixedRankGenerators(ValueError):
    pass


class NotSameSCC(ValueError):
    pass


class RankDropped(ValueError):
    pass


@dataclass
class ImageGraph:
    table: MorphismTable
    rank: int
    vertices: tuple[Subspace, ...]
    letter_image: dict[str, Subspace]
    letter_kernel: dict[str, Subspace]
    out: dict[Subspace, dict[str, Subspace]]
    scc_id: dict[Subspace, int]
    num_sccs: int
    condensation: frozenset[tuple[int, int]]


def _tarjan(vertices, neighbors):
    """Iterative Tarjan; components come out sinks-first."""
    index: dict = {}
    lowlink: dict = {}
    on_stack: set = set()
    stack: list = []
    components: list[list] = []
    counter = 0
    for root in vertices:
        if root in index:
            continue
        work = [(root, iter(neighbors(root)))]
        index[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(neighbors(w))))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                components.append(component)
    return components


def build_image_graph(table: MorphismTable) -> ImageGraph:
    ranks = {a: rank(table.mapping[a]) for a in table.alphabet}
    distinct = set(ranks.values())
    if len(distinct) != 1:
        raise MixedRankGenerators(f"generator ranks {ranks!r} are not all equal")
    r = distinct.pop()

    letter_image = {a: image(table.mapping[a]) for a in table.alphabet}
    letter_kernel = {a: kernel(table.mapping[a]) for a in table.alphabet}

    vertices: list[Subspace] = []
    seen: set[Subspace] = set()
    for a in table.alphabet:
        V = letter_image[a]
        if V not in seen:
            seen.add(V)
            vertices.append(V)
    out: dict[Subspace, dict[str, Subspace]] = {}
    queue = list(vertices)
    i = 0
    while i < len(queue):
        V = queue[i]
        i += 1
        adjacency = {}
        for a in table.alphabet:
            if trivial_intersection(V, letter_kernel[a]):
                W = letter_image[a]
                adjacency[a] = W
                if W not in seen:
                    seen.add(W)
                    vertices.append(W)
                    queue.append(W)
        out[V] = adjacency

    components = _tarjan(vertices, lambda v: out[v].values())
    scc_id = {}
    for cid, component in enumerate(components):
        for v in component:
            scc_id[v] = cid
    condensation = frozenset(
        (scc_id[v], scc_id[w])
        for v in vertices
        for w in out[v].values()
        if scc_id[v] != scc_id[w]
    )
    return ImageGraph(table, r, tuple(vertices), letter_image, letter_kernel,
                      out, scc_id, len(components), condensation)


def scc_shortest_path(G: ImageGraph, V1: Subspace, V2: Subspace) -> Word:
    """Lex-least shortest label word from V1 to V2 (both in one SCC)."""
    if G.scc_id[V1] != G.scc_id[V2]:
        raise NotSameSCC("vertices lie in different SCCs")
    if V1 == V2:
        return ()
    parent: dict[Subspace, Word] = {V1: ()}
    frontier = [V1]
    while frontier:
        fresh = []
        for v in frontier:
            for a in G.table.alphabet:
                w = G.out[v].get(a)
                if w is None or w in parent:
                    continue
                parent[w] = parent[v] + (a,)
                if w == V2:
                    path = parent[w]
                    assert len(path) <= comb(G.table.n, G.rank)
                    return path
                fresh.append(w)
        frontier = fresh
    raise NotSameSCC("no path found despite matching SCC ids")


def scc_segment_decompose(G: ImageGraph, word) -> list[tuple[str, Word]]:
    """Split a rank-r word into maximal runs of letters whose images share
    an SCC; consecutive runs lie in different SCCs."""
    word = tuple(word)
    if not word:
        raise ValueError("word must be nonempty")
    m = Mat.identity(G.table.n)
    for i, a in enumerate(word):
        m = m * G.table.mapping[a]
        if rank(m) != G.rank:
            raise RankDropped(f"prefix {word[:i + 1]!r} leaves rank {G.rank}")
    segments: list[tuple[str, Word]] = []
    head = word[0]
    current = G.scc_id[G.letter_image[head]]
    body: list[str] = []
    for a in word[1:]:
        cid = G.scc_id[G.letter_image[a]]
        if cid == current:
            body.append(a)
        else:
            segments.append((head, tuple(body)))
            head, current, body = a, cid, []
    segments.append((head, tuple(body)))
    assert len(segments) <= 2 * comb(G.table.n, G.rank)
    return segments


def to_dot(G: ImageGraph) -> str:
    """GraphViz rendering with one cluster per SCC."""
    names = {v: f"v{i}" for i, v in enumerate(G.vertices)}

    def label(v: Subspace) -> str:
        rows = [" ".join(str(x) for x in row) for row in v.basis.data]
        return "\\n".join(rows) if rows else "0"

    lines = ["digraph image_graph {", "  rankdir=LR;"]
    by_scc: dict[int, list[Subspace]] = {}
    for v in G.vertices:
        by_scc.setdefault(G.scc_id[v], []).append(v)
    for cid in sorted(by_scc):
        lines.append(f"  subgraph cluster_{cid} {{")
        lines.append(f'    label="scc {cid}";')
        for v in by_scc[cid]:
            lines.append(f'    {names[v]} [label="{label(v)}"];')
        lines.append("  }")
    for v in G.vertices:
        for a, w in G.out[v].items():
            lines.append(f'  {names[v]} -> {names[w]} [label="{a}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
