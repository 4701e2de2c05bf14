"""The three-variable polynomial of a ribbon graph, by three routes.

* ``brt_recursive`` -- deletion/contraction axioms with a one-vertex
  subgraph-sum base case, memoized on the normalized graph.
* ``brt_subgraph`` -- spanning-subgraph sum, division-free.
* ``brt_tree_expansion`` -- spanning trees with internal/external
  activities relative to an edge order.

All three agree on connected graphs; the test suite enforces this.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterator, Sequence

from .polynomials import MultiPoly
from .ribbon import DisconnectedGraph, Edge, RibbonGraph

DEFAULT_BASE_CAP = 24


class BaseCaseTooLarge(ValueError):
    """One-vertex base case exceeds the subgraph-enumeration cap."""


@dataclass(frozen=True)
class ActivityRecord:
    """A spanning tree with its activities under a fixed edge order."""

    tree: frozenset
    internally_active: frozenset
    externally_active: frozenset


def _subgraph_counts(g: RibbonGraph, keep: frozenset):
    h = g.spanning_subgraph(keep)
    return h.counts


def brt_subgraph(g: RibbonGraph) -> MultiPoly:
    """Spanning-subgraph expansion, division-free.

    Sum over all edge subsets H of (X-1)^(k(H)-k(G)) Y^n(H) Z^g(H); the
    exponent k(H) - k(G) is non-negative for spanning subgraphs.
    """
    kg = g.counts.k
    terms: dict = {}
    edges = list(g.edges)
    for r in range(len(edges) + 1):
        for keep in itertools.combinations(edges, r):
            c = _subgraph_counts(g, frozenset(keep))
            m = c.k - kg
            for j in range(m + 1):
                coeff = comb(m, j) * (-1) ** (m - j)
                key = (j, c.n, c.g)
                terms[key] = terms.get(key, 0) + coeff
    return MultiPoly(terms)


def _one_vertex_sum(g: RibbonGraph, base_cap: int) -> MultiPoly:
    ne = len(g.edges)
    if ne > base_cap:
        raise BaseCaseTooLarge(
            f"one-vertex base case has {ne} edges (cap {base_cap})"
        )
    terms: dict = {}
    edges = list(g.edges)
    for r in range(ne + 1):
        for keep in itertools.combinations(edges, r):
            c = _subgraph_counts(g, frozenset(keep))
            key = (0, c.n, c.g)
            terms[key] = terms.get(key, 0) + 1
    return MultiPoly(terms)


def brt_recursive(
    g: RibbonGraph,
    base_cap: int = DEFAULT_BASE_CAP,
    _memo: dict | None = None,
) -> MultiPoly:
    """Deletion/contraction recursion with memoization.

    Picks the lowest non-bridge non-loop edge; applies the bridge axiom when
    only bridges and loops remain on a multi-vertex graph; one-vertex graphs
    are evaluated by the subgraph sum over all 2^e spanning subgraphs.
    """
    g.require_connected()
    memo = {} if _memo is None else _memo

    def go(h: RibbonGraph) -> MultiPoly:
        key = (h.vertices, h.edges)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if len(h.vertices) == 1:
            out = _one_vertex_sum(h, base_cap)
        else:
            pick = None
            bridge = None
            for e in h.edges:
                if h.is_loop(e):
                    continue
                if h.is_bridge(e):
                    if bridge is None:
                        bridge = e
                else:
                    pick = e
                    break
            if pick is not None:
                out = go(h.delete_edge(pick)) + go(h.contract_edge(pick))
            else:
                # Multi-vertex connected graph: a non-loop edge exists and
                # all non-loops are bridges.
                assert bridge is not None
                out = MultiPoly.monomial(1, 0, 0) * go(
                    h.contract_edge(bridge)
                )
        memo[key] = out
        return out

    return go(g)


def enumerate_spanning_trees(
    g: RibbonGraph, order: Sequence[Edge] | None = None
) -> Iterator[ActivityRecord]:
    """All spanning trees of the underlying graph, with activities.

    ``order`` is a total order on the edges (defaults to the natural pair
    order).  An edge of the tree is internally active when it is the
    order-minimum of its cut; an edge outside the tree is externally active
    when it is the order-minimum of its fundamental cycle.
    """
    g.require_connected()
    edges = list(g.edges)
    if order is None:
        order = sorted(edges)
    if sorted(order) != sorted(edges):
        raise ValueError("edge order must be a permutation of the edges")
    rank = {e: i for i, e in enumerate(order)}
    nv = len(g.vertices)
    vat = g.vertex_of

    def components(keep) -> list[int]:
        parent = list(range(nv))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in keep:
            a, b = find(vat[e[0]]), find(vat[e[1]])
            if a != b:
                parent[b] = a
        return [find(x) for x in range(nv)]

    non_loops = [e for e in edges if vat[e[0]] != vat[e[1]]]
    for tree in itertools.combinations(non_loops, nv - 1):
        comp = components(tree)
        if len(set(comp)) != 1:
            continue
        tset = frozenset(tree)
        internal = set()
        for e in tree:
            cut_comp = components(tset - {e})
            cut = {
                x
                for x in edges
                if cut_comp[vat[x[0]]] != cut_comp[vat[x[1]]]
            }
            if min(cut, key=rank.__getitem__) == e:
                internal.add(e)
        external = set()
        for e in edges:
            if e in tset:
                continue
            if vat[e[0]] == vat[e[1]]:
                # A loop's fundamental cycle is the loop itself.
                external.add(e)
                continue
            # Fundamental cycle: e plus the tree path between its ends.
            cycle = {e} | _tree_path(g, tset, e)
            if min(cycle, key=rank.__getitem__) == e:
                external.add(e)
        yield ActivityRecord(
            tree=tset,
            internally_active=frozenset(internal),
            externally_active=frozenset(external),
        )


def _tree_path(g: RibbonGraph, tree: frozenset, e: Edge) -> set:
    """Edges of the tree path connecting the endpoints of e."""
    vat = g.vertex_of
    adj: dict[int, list] = {}
    for t in tree:
        a, b = vat[t[0]], vat[t[1]]
        adj.setdefault(a, []).append((b, t))
        adj.setdefault(b, []).append((a, t))
    src, dst = vat[e[0]], vat[e[1]]
    prev = {src: None}
    queue = [src]
    while queue:
        x = queue.pop(0)
        if x == dst:
            break
        for y, t in adj.get(x, []):
            if y not in prev:
                prev[y] = (x, t)
                queue.append(y)
    path = set()
    x = dst
    while prev[x] is not None:
        x, t = prev[x]
        path.add(t)
    return path


def brt_tree_expansion(
    g: RibbonGraph, order: Sequence[Edge] | None = None
) -> MultiPoly:
    """Spanning-tree expansion with activities.

    Sum over spanning trees T of X^i(T) times the sum over subsets S of the
    externally active edges of Y^n(T u S) Z^g(T u S), with nullity and genus
    measured on the ribbon subgraph T u S.
    """
    g.require_connected()
    terms: dict = {}
    for rec in enumerate_spanning_trees(g, order):
        i = len(rec.internally_active)
        ext = sorted(rec.externally_active)
        for r in range(len(ext) + 1):
            for s in itertools.combinations(ext, r):
                c = _subgraph_counts(g, rec.tree | set(s))
                key = (i, c.n, c.g)
                terms[key] = terms.get(key, 0) + 1
    return MultiPoly(terms)
