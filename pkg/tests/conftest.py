"""Shared fixtures: frozen diagrams, random generators, oracles."""

from __future__ import annotations

import random
from fractions import Fraction

import ribbonpoly as rp

# -- frozen diagram fixtures -------------------------------------------

# Left-handed trefoil (standard sequential PD labelling).
TREFOIL_PD = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"

# Braid closures: right-handed trefoil and the figure-eight knot.
TREFOIL_BRAID = "1 1 1"
FIGURE_EIGHT_BRAID = "1 -2 1 -2"

# One-crossing positive kink (unknot with writhe +1).
KINK_PD = "X[1,1,2,2]"

# An 8-crossing knot diagram whose all-A ribbon graph has 3 vertices,
# 8 edges, 5 faces and genus 1, with vertex orbit sizes {10, 3, 3} and
# face orbit sizes {6, 2, 4, 2, 2}.
PD_8_21 = (
    "X[1,7,2,6] X[7,5,8,4] X[5,1,6,16] X[11,9,12,8] "
    "X[9,15,10,14] X[15,11,16,10] X[2,13,3,14] X[12,3,13,4]"
)

# Four-column pretzel diagram P(2, 2, -2, -2): non-alternating, genus 1,
# and its genus bound from the Jones span is sharp.
PD_PRETZEL_2_2_m2_m2 = (
    "X[8,1,5,4] X[1,8,2,7] X[12,6,9,5] X[6,12,7,11] "
    "X[9,16,10,13] X[15,10,16,11] X[13,3,14,4] X[2,14,3,15]"
)


# -- pretzel generator (even twist counts only) -------------------------

_CCW = {"NE": 0, "NW": 1, "SW": 2, "SE": 3}
_ORDER = ["NE", "NW", "SW", "SE"]  # counterclockwise


def pretzel_pd(twists) -> str:
    """PD text of a vertical-twist pretzel diagram.

    Each entry is a signed even twist count for one column; left rails flow
    down and right rails up, so even columns keep the rail flow consistent.
    """
    if any(p == 0 or p % 2 for p in twists):
        raise ValueError("twist counts must be non-zero and even")
    n = len(twists)
    arcs = []
    for j, p in enumerate(twists):
        m = abs(p)
        for t in range(m - 1):
            arcs.append(((j, t, "SW"), (j, t + 1, "NW")))
            arcs.append(((j, t, "SE"), (j, t + 1, "NE")))
    for j in range(n):
        k = (j + 1) % n
        arcs.append(((j, 0, "NE"), (k, 0, "NW")))
        arcs.append(
            ((j, abs(twists[j]) - 1, "SE"), (k, abs(twists[k]) - 1, "SW"))
        )
    partner = {}
    for a, b in arcs:
        partner[a] = b
        partner[b] = a

    crossings = {}
    under_in = {}
    for j, p in enumerate(twists):
        for t in range(abs(p)):
            if t % 2 == 0:
                entries = {"NW": "SE", "SW": "NE"}  # entry -> exit
                over_diag = ("NW", "SE") if p > 0 else ("SW", "NE")
            else:
                entries = {"NE": "SW", "SE": "NW"}
                over_diag = ("SE", "NW") if p > 0 else ("NE", "SW")
            over_entry = next(e for e in entries if e in over_diag)
            under_in[(j, t)] = next(e for e in entries if e != over_entry)
            crossings[(j, t)] = entries

    label = {}
    next_label = 1
    seen = set()
    for start in sorted(partner):
        if start in seen or start[2] not in crossings[start[:2]]:
            continue
        p = start
        while p not in seen:
            seen.add(p)
            jj, tt, cc = p
            exit_port = (jj, tt, crossings[(jj, tt)][cc])
            seen.add(exit_port)
            q = partner[exit_port]
            label[exit_port] = label[q] = next_label
            next_label += 1
            p = q
    pd = []
    for (j, t) in sorted(crossings):
        k0 = _CCW[under_in[(j, t)]]
        ports = [(j, t, _ORDER[(k0 + s) % 4]) for s in range(4)]
        pd.append("X[%d,%d,%d,%d]" % tuple(label[p] for p in ports))
    return " ".join(pd)


# -- random generators --------------------------------------------------


def random_braid_diagram(rng: random.Random, max_crossings: int, strands=3):
    """A connected braid-closure diagram with 1..max_crossings crossings."""
    while True:
        length = rng.randint(1, max_crossings)
        word = " ".join(
            str(rng.choice([1, -1]) * rng.randint(1, strands - 1))
            for _ in range(length)
        )
        d = rp.parse_braid(word)
        if d.is_connected:
            return d


def random_ribbon_graph(rng: random.Random, max_edges: int) -> rp.RibbonGraph:
    """A random connected ribbon graph with 1..max_edges edges.

    A spanning tree over a random vertex count guarantees connectivity;
    remaining edges (possibly loops) land on uniform endpoints, and each
    vertex gets a uniformly random rotation of its half-edges.
    """
    ne = rng.randint(1, max_edges)
    nv = rng.randint(1, min(4, ne + 1))
    at_vertex = {}
    for i in range(nv - 1):  # tree edge i joins vertex i+1 to an earlier one
        at_vertex[2 * i] = rng.randrange(i + 1)
        at_vertex[2 * i + 1] = i + 1
    for i in range(nv - 1, ne):
        at_vertex[2 * i] = rng.randrange(nv)
        at_vertex[2 * i + 1] = rng.randrange(nv)
    cycles = []
    for v in range(nv):
        hs = [h for h, vv in at_vertex.items() if vv == v]
        rng.shuffle(hs)
        cycles.append(tuple(hs))
    edges = [(2 * i, 2 * i + 1) for i in range(ne)]
    g = rp.RibbonGraph.make(cycles, edges)
    assert g.is_connected
    return g


def random_state(rng: random.Random, d: rp.PlanarDiagram) -> rp.State:
    n = d.n_crossings
    return rp.State.from_bits(rng.getrandbits(n) if n else 0, n)


# -- oracles ------------------------------------------------------------


def kirchhoff_tree_count(g: rp.RibbonGraph) -> int:
    """Spanning trees of the underlying multigraph via the matrix-tree
    theorem, computed with exact Fraction elimination."""
    nv = len(g.vertices)
    if nv == 1:
        return 1
    lap = [[Fraction(0)] * nv for _ in range(nv)]
    vat = g.vertex_of
    for a, b in g.edges:
        u, v = vat[a], vat[b]
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    m = [row[1:] for row in lap[1:]]  # delete row/column 0
    n = nv - 1
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] / m[col][col]
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    assert det.denominator == 1
    return int(det)
