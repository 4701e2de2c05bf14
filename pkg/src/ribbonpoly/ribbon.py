"""Oriented ribbon graphs as permutation triples on half-edges.

A ribbon graph stores its vertices as explicit cyclic sequences of half-edge
identifiers (so isolated vertices survive edge deletion) and its edges as a
fixed-point-free pairing of the half-edges.  The face permutation is derived:
sigma2 = sigma1 o sigma0^-1, so that sigma0(sigma1(sigma2(h))) = h.

Edges are identified by their half-edge pair (h1, h2) with h1 < h2; edge
order, where needed, is the natural order on these pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

Edge = tuple[int, int]


class UnknownEdge(KeyError):
    """Edge not present in the graph."""


class LoopContraction(ValueError):
    """Contracting a loop is not defined."""


class DisconnectedGraph(ValueError):
    """Operation requires a connected ribbon graph."""


def _edge(h1: int, h2: int) -> Edge:
    return (h1, h2) if h1 < h2 else (h2, h1)


@dataclass(frozen=True)
class GraphCounts:
    v: int
    e: int
    f: int
    k: int
    g: int
    n: int

    def __post_init__(self):
        assert self.v - self.e + self.f == 2 * self.k - 2 * self.g
        assert self.n == self.e - self.v + self.k
        assert self.g >= 0
        assert self.n - 2 * self.g == self.f - self.k >= 0


@dataclass(frozen=True)
class RibbonGraph:
    """Vertex rotation cycles plus the edge pairing of the half-edges."""

    vertices: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    @classmethod
    def make(cls, vertices, edges) -> "RibbonGraph":
        """Normalize input and validate.

        Vertex cycles are rotated to start at their minimal half-edge and
        sorted by that minimum (empty cycles last); edge pairs are sorted.
        """
        vs = []
        for cyc in vertices:
            cyc = tuple(cyc)
            if cyc:
                k = cyc.index(min(cyc))
                cyc = cyc[k:] + cyc[:k]
            vs.append(cyc)
        vs.sort(key=lambda c: c[0] if c else float("inf"))
        es = tuple(sorted(_edge(a, b) for a, b in edges))
        g = cls(tuple(vs), es)
        g._validate()
        return g

    def _validate(self):
        at_vertex: dict[int, int] = {}
        for vi, cyc in enumerate(self.vertices):
            for h in cyc:
                if h in at_vertex:
                    raise ValueError(f"half-edge {h} appears twice")
                at_vertex[h] = vi
        paired: set[int] = set()
        for a, b in self.edges:
            if a == b:
                raise ValueError("edge pairing has a fixed point")
            for h in (a, b):
                if h in paired:
                    raise ValueError(f"half-edge {h} in two edges")
                if h not in at_vertex:
                    raise ValueError(f"half-edge {h} not on any vertex")
                paired.add(h)
        if len(paired) != len(at_vertex):
            raise ValueError("unpaired half-edges present")

    # -- permutations --------------------------------------------------

    @cached_property
    def sigma0(self) -> dict:
        nxt = {}
        for cyc in self.vertices:
            for i, h in enumerate(cyc):
                nxt[h] = cyc[(i + 1) % len(cyc)]
        return nxt

    @cached_property
    def sigma1(self) -> dict:
        m = {}
        for a, b in self.edges:
            m[a] = b
            m[b] = a
        return m

    @cached_property
    def sigma0_inv(self) -> dict:
        return {b: a for a, b in self.sigma0.items()}

    def sigma2_of(self, h: int) -> int:
        return self.sigma1[self.sigma0_inv[h]]

    @cached_property
    def face_orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbits of sigma2 on the half-edges (isolated vertices excluded)."""
        orbits = []
        seen: set[int] = set()
        for cyc in self.vertices:
            for start in cyc:
                if start in seen:
                    continue
                orb = []
                h = start
                while h not in seen:
                    seen.add(h)
                    orb.append(h)
                    h = self.sigma2_of(h)
                orbits.append(tuple(orb))
        return tuple(orbits)

    @cached_property
    def vertex_of(self) -> dict:
        return {
            h: vi for vi, cyc in enumerate(self.vertices) for h in cyc
        }

    @cached_property
    def component_of_vertex(self) -> tuple[int, ...]:
        """Connected-component index of each vertex of the underlying graph."""
        nv = len(self.vertices)
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            ra, rb = find(self.vertex_of[a]), find(self.vertex_of[b])
            if ra != rb:
                parent[rb] = ra
        roots: dict[int, int] = {}
        out = []
        for vi in range(nv):
            r = find(vi)
            out.append(roots.setdefault(r, len(roots)))
        return tuple(out)

    # -- counts --------------------------------------------------------

    @cached_property
    def counts(self) -> GraphCounts:
        v = len(self.vertices)
        e = len(self.edges)
        isolated = sum(1 for cyc in self.vertices if not cyc)
        f = len(self.face_orbits) + isolated
        k = len(set(self.component_of_vertex)) if v else 0
        g2 = 2 * k - v + e - f
        assert g2 % 2 == 0 and g2 >= 0
        return GraphCounts(v=v, e=e, f=f, k=k, g=g2 // 2, n=e - v + k)

    @property
    def is_connected(self) -> bool:
        return self.counts.k == 1

    def require_connected(self):
        if not self.is_connected:
            raise DisconnectedGraph("ribbon graph is not connected")

    # -- edge predicates ----------------------------------------------

    def _check_edge(self, e: Edge):
        if e not in set(self.edges):
            raise UnknownEdge(e)

    def is_loop(self, e: Edge) -> bool:
        self._check_edge(e)
        return self.vertex_of[e[0]] == self.vertex_of[e[1]]

    def is_bridge(self, e: Edge) -> bool:
        self._check_edge(e)
        if self.is_loop(e):
            return False
        return self.delete_edge(e).counts.k == self.counts.k + 1

    # -- modifications -------------------------------------------------

    def delete_edge(self, e: Edge) -> "RibbonGraph":
        """Remove the edge and both its half-edges; vertices persist."""
        self._check_edge(e)
        drop = set(e)
        vs = [tuple(h for h in cyc if h not in drop) for cyc in self.vertices]
        es = [x for x in self.edges if x != e]
        return RibbonGraph.make(vs, es)

    def contract_edge(self, e: Edge) -> "RibbonGraph":
        """Merge the two endpoints, amalgamating their rotation cycles.

        With cycles (e+, u1..up) and (e-, w1..wq), the merged vertex reads
        (u1..up, w1..wq).  Loops are rejected.
        """
        self._check_edge(e)
        h1, h2 = e
        v1, v2 = self.vertex_of[h1], self.vertex_of[h2]
        if v1 == v2:
            raise LoopContraction(e)

        def opened(vi, h):
            cyc = self.vertices[vi]
            k = cyc.index(h)
            return cyc[k + 1:] + cyc[:k]

        merged = opened(v1, h1) + opened(v2, h2)
        vs = []
        for vi, cyc in enumerate(self.vertices):
            if vi == min(v1, v2):
                vs.append(merged)
            elif vi != max(v1, v2):
                vs.append(cyc)
        es = [x for x in self.edges if x != e]
        return RibbonGraph.make(vs, es)

    def dual(self) -> "RibbonGraph":
        """The surface dual: faces become vertices, edge pairing unchanged.

        Isolated vertices are self-dual (one vertex, one face).
        """
        vs = list(self.face_orbits)
        vs.extend(() for cyc in self.vertices if not cyc)
        return RibbonGraph.make(vs, self.edges)

    def spanning_subgraph(self, keep) -> "RibbonGraph":
        """Subgraph on the full vertex set keeping only the given edges."""
        keep = set(keep)
        drop = {h for x in self.edges if x not in keep for h in x}
        vs = [tuple(h for h in cyc if h not in drop) for cyc in self.vertices]
        return RibbonGraph.make(vs, sorted(keep))

    # -- serialization -------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "vertices": [list(cyc) for cyc in self.vertices],
            "edges": [list(e) for e in self.edges],
        }

    def cycle_text(self) -> str:
        """Cycle-notation text for sigma0, sigma1, sigma2."""

        def fmt(cycles):
            return (
                "{"
                + ", ".join(
                    "{" + ", ".join(str(h) for h in cyc) + "}"
                    for cyc in cycles
                )
                + "}"
            )

        return "\n".join(
            [
                "sigma0 = " + fmt([c for c in self.vertices if c]),
                "sigma1 = " + fmt(self.edges),
                "sigma2 = " + fmt(self.face_orbits),
            ]
        )


def isolated_vertex_graph(n: int = 1) -> RibbonGraph:
    """n isolated vertices, no edges."""
    return RibbonGraph.make([()] * n, [])
