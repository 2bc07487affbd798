"""Whitehead graphs of words.

For a word u1 ... uk over a rank n free group, the Whitehead graph has the
2n letters e1, e1^-1, ..., en, en^-1 as vertices and one edge {ui, u_{i+1}^-1}
for every consecutive position, plus the wrap-around edge {uk, u1^-1}.  The
number of edges therefore equals the length of the word.  Loops (only ever
produced by the wrap-around pair of a non cyclically reduced word) and
parallel edges are both kept.

The point of the construction: a cyclically reduced word that is primitive
always has a separable graph, meaning disconnected or with a cut vertex.
That is a necessary condition only, and it is checked exhaustively by the
verification harness.  Cut vertices are found with the usual low-link DFS;
loops are ignored for that purpose (they never affect separation) but stay
in the edge multiset for counting and rendering.
"""

from __future__ import annotations

from dataclasses import dataclass

from .words import Word, letter_key, letter_name


@dataclass(frozen=True)
class CutVertexVerdict:
    """Outcome of the separability check.

    separable is True when the graph is disconnected or has a cut vertex;
    cut_vertex is the least such vertex in letter order, or None.
    """

    connected: bool
    cut_vertex: int | None
    separable: bool


def _pair(x: int, y: int) -> tuple[int, int]:
    return (x, y) if letter_key(x) <= letter_key(y) else (y, x)


class WhiteheadGraph:
    """Undirected multigraph on the 2n letters of a rank n free group."""

    def __init__(self, rank: int, edges=()):
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        self.rank = rank
        canon = []
        for x, y in edges:
            for v in (x, y):
                if v == 0 or abs(v) > rank:
                    raise ValueError(f"vertex {v} not a letter of rank {rank}")
            canon.append(_pair(x, y))
        canon.sort(key=lambda p: (letter_key(p[0]), letter_key(p[1])))
        self.edges: tuple[tuple[int, int], ...] = tuple(canon)

    @property
    def vertices(self) -> list[int]:
        return [s * i for i in range(1, self.rank + 1) for s in (1, -1)]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        # a loop contributes 2
        return sum((x == v) + (y == v) for x, y in self.edges)

    def _simple_adjacency(self) -> dict[int, list[int]]:
        # loop-free simple graph; parallel edges collapse (they never change
        # which vertices separate the graph)
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for x, y in self.edges:
            if x != y:
                adj[x].add(y)
                adj[y].add(x)
        return {v: sorted(nbrs, key=letter_key) for v, nbrs in adj.items()}

    def is_connected(self) -> bool:
        verts = self.vertices
        adj = self._simple_adjacency()
        seen = {verts[0]}
        stack = [verts[0]]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == len(verts)

    def articulation_points(self) -> list[int]:
        """Cut vertices, least first in letter order.  Low-link DFS, run per
        component; loops are excluded by the simple adjacency."""
        adj = self._simple_adjacency()
        disc: dict[int, int] = {}
        low: dict[int, int] = {}
        cuts: set[int] = set()
        timer = [0]

        def dfs(v: int, parent: int | None):
            # the simple graph has a single copy of the tree edge, so the
            # plain parent skip is exact even though the source is a multigraph
            disc[v] = low[v] = timer[0]
            timer[0] += 1
            children = 0
            for u in adj[v]:
                if u == parent:
                    continue
                if u in disc:
                    low[v] = min(low[v], disc[u])
                else:
                    children += 1
                    dfs(u, v)
                    low[v] = min(low[v], low[u])
                    if parent is not None and low[u] >= disc[v]:
                        cuts.add(v)
            return children

        for root in self.vertices:
            if root not in disc:
                root_children = dfs(root, None)
                if root_children >= 2:
                    cuts.add(root)
        return sorted(cuts, key=letter_key)

    def find_cut_vertex(self) -> CutVertexVerdict:
        connected = self.is_connected()
        cuts = self.articulation_points()
        cut = cuts[0] if cuts else None
        return CutVertexVerdict(
            connected=connected,
            cut_vertex=cut,
            separable=(not connected) or cut is not None,
        )

    def to_dot(self, name: str = "whitehead") -> str:
        """DOT text; multigraph, loops and parallel edges one line each."""
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{letter_name(v)}";')
        for x, y in self.edges:
            lines.append(f'  "{letter_name(x)}" -- "{letter_name(y)}";')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"WhiteheadGraph(rank={self.rank}, edges={self.edge_count})"


def whitehead_edges(letters: tuple[int, ...]) -> list[tuple[int, int]]:
    """Edge list for a letter sequence read cyclically: {ui, -u_{i+1}} for
    each position, the last letter pairing with the first."""
    k = len(letters)
    return [_pair(letters[i], -letters[(i + 1) % k]) for i in range(k)]


def build_whitehead_graph(a: Word, rank: int) -> WhiteheadGraph:
    """Whitehead graph of a word.  Indices must fit under rank.

    >>> g = build_whitehead_graph(Word([1, 2, 2, -1]), 2)
    >>> g.edge_count
    4
    """
    if rank < 1:
        raise ValueError(f"rank must be >= 1, got {rank}")
    for x in a.letters:
        if abs(x) > rank:
            raise ValueError(f"letter {letter_name(x)} exceeds rank {rank}")
    return WhiteheadGraph(rank, whitehead_edges(a.letters))
