"""Planar link diagrams: PD codes, braid closures, states and state circles.

A diagram is a list of crossings, each holding four arc labels in
counterclockwise cyclic order starting at the incoming under-strand.  With
ports numbered 0..3 in that order:

* the under-strand enters at port 0 and leaves at port 2;
* the A-smoothing joins ports (0,1) and (2,3);
* the B-smoothing joins ports (1,2) and (3,0).

Edge labels induce component orientations by sequential numbering along each
component; orientation is recovered by propagating the incoming-under
constraint along each component, with the label sequence as a tiebreaker for
components that never pass under a crossing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

Port = tuple[int, int]  # (crossing index, port position 0..3)


class PDSyntaxError(ValueError):
    """Malformed PD text."""


class LabelError(ValueError):
    """An edge label does not occur exactly twice."""


class BraidIndexError(ValueError):
    """Braid generator index out of range."""


class OrientationError(ValueError):
    """The under-strand constraints of a component are contradictory."""


class DisconnectedDiagram(ValueError):
    """Operation requires a connected diagram."""


class TooManyCrossings(ValueError):
    """Crossing count exceeds the configured cap."""


@dataclass(frozen=True)
class PlanarDiagram:
    """A plane link diagram as crossings plus optional crossingless circles."""

    crossings: tuple[tuple[int, int, int, int], ...]
    unknot_components: int = 0

    def __post_init__(self):
        if not self.crossings and self.unknot_components == 0:
            raise ValueError("a diagram needs at least one circle")
        seen: dict[int, int] = {}
        for cr in self.crossings:
            if len(cr) != 4:
                raise PDSyntaxError(f"crossing {cr} does not have 4 ports")
            for lab in cr:
                seen[lab] = seen.get(lab, 0) + 1
        for lab, cnt in seen.items():
            if cnt != 2:
                bad = [i for i, cr in enumerate(self.crossings) if lab in cr]
                raise LabelError(
                    f"edge label {lab} occurs {cnt} times (crossings {bad})"
                )

    # -- basic structure ----------------------------------------------

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    def ports(self) -> Iterator[Port]:
        for ci in range(len(self.crossings)):
            for i in range(4):
                yield (ci, i)

    def label_at(self, port: Port) -> int:
        return self.crossings[port[0]][port[1]]

    @cached_property
    def arc_partner(self) -> dict:
        """Map each port to the other end of its arc."""
        ends: dict[int, list[Port]] = {}
        for p in self.ports():
            ends.setdefault(self.label_at(p), []).append(p)
        partner: dict[Port, Port] = {}
        for ps in ends.values():
            a, b = ps
            partner[a] = b
            partner[b] = a
        return partner

    @cached_property
    def is_connected(self) -> bool:
        if not self.crossings:
            return self.unknot_components == 1
        if self.unknot_components:
            return False
        seen = {0}
        stack = [0]
        adj: dict[int, set[int]] = {}
        for ci, cr in enumerate(self.crossings):
            for lab in cr:
                adj.setdefault(lab, set()).add(ci)
        while stack:
            ci = stack.pop()
            for lab in self.crossings[ci]:
                for cj in adj[lab]:
                    if cj not in seen:
                        seen.add(cj)
                        stack.append(cj)
        return len(seen) == len(self.crossings)

    def require_connected(self):
        if not self.is_connected:
            raise DisconnectedDiagram("diagram is not connected")

    # -- orientation ---------------------------------------------------

    def _strand_cycles(self) -> list[list[Port]]:
        """Directed strand cycles: orbits of entry -> next entry.

        Every port appears in exactly one cycle as an entry; each link
        component corresponds to two opposite cycles.
        """
        nxt = {}
        for ci, i in self.ports():
            exit_port = (ci, (i + 2) % 4)
            nxt[(ci, i)] = self.arc_partner[exit_port]
        cycles = []
        seen: set[Port] = set()
        for start in self.ports():
            if start in seen:
                continue
            cyc = []
            p = start
            while p not in seen:
                seen.add(p)
                cyc.append(p)
                p = nxt[p]
            cycles.append(cyc)
        return cycles

    @cached_property
    def oriented_cycles(self) -> list[list[Port]]:
        """One entry-cycle per component, in the component's orientation.

        Direction is fixed by under-strand passages (the component must
        enter port 0, not port 2); components with no under passage fall
        back to the direction in which consecutive labels mostly increase.
        """
        cycles = self._strand_cycles()
        by_min: dict[Port, list[list[Port]]] = {}
        # Pair up opposite cycles: they cover the same set of crossings'
        # ports, keyed by the minimum port over both directions.
        comp_of: dict[Port, int] = {}
        comps: list[list[list[Port]]] = []
        for cyc in cycles:
            ports_either = set(cyc) | {(c, (i + 2) % 4) for c, i in cyc}
            key = min(ports_either)
            found = None
            for p in ports_either:
                if p in comp_of:
                    found = comp_of[p]
                    break
            if found is None:
                found = len(comps)
                comps.append([])
            for p in ports_either:
                comp_of[p] = found
            comps[found].append(cyc)

        out = []
        for pair in comps:
            assert len(pair) == 2
            chosen = None
            for cyc in pair:
                votes = [i for _, i in cyc if i in (0, 2)]
                if votes:
                    if all(i == 0 for i in votes):
                        chosen = cyc
                        break
                    if not all(i == 2 for i in votes):
                        raise OrientationError(
                            "inconsistent under-strand directions; the PD "
                            "code is not sequentially numbered"
                        )
            if chosen is None:
                # Pure over-strand component: score label sequentiality.
                def score(cyc):
                    labs = [self.label_at(p) for p in cyc]
                    return sum(
                        1
                        for a, b in zip(labs, labs[1:] + labs[:1])
                        if b == a + 1
                    )

                s0, s1 = score(pair[0]), score(pair[1])
                if s0 != s1:
                    chosen = pair[0] if s0 > s1 else pair[1]
                else:
                    chosen = min(pair, key=min)
            out.append(chosen)
        return out

    @cached_property
    def component_count(self) -> int:
        return len(self.oriented_cycles) + self.unknot_components

    @cached_property
    def entry_ports(self) -> set:
        """Ports where an oriented strand enters its crossing."""
        return {p for cyc in self.oriented_cycles for p in cyc}

    @cached_property
    def crossing_signs(self) -> tuple[int, ...]:
        """+1 when the over-strand enters at port 3, -1 at port 1."""
        signs = []
        for ci in range(len(self.crossings)):
            if (ci, 3) in self.entry_ports:
                signs.append(1)
            else:
                assert (ci, 1) in self.entry_ports
                signs.append(-1)
        return tuple(signs)

    def to_json_obj(self) -> dict:
        return {"crossings": [list(cr) for cr in self.crossings]}


def writhe(d: PlanarDiagram) -> int:
    """Sum of crossing signs of the oriented diagram."""
    return sum(d.crossing_signs)


def mirror(d: PlanarDiagram) -> PlanarDiagram:
    """Swap over/under at every crossing.

    The cyclic port order is preserved; each crossing is re-rooted at the
    old over-strand's entry port, which becomes the new incoming under.
    """
    new = []
    for ci, cr in enumerate(d.crossings):
        j = 3 if d.crossing_signs[ci] == 1 else 1
        new.append(tuple(cr[(j + k) % 4] for k in range(4)))
    return PlanarDiagram(tuple(new), d.unknot_components)


# -- states ------------------------------------------------------------


@dataclass(frozen=True)
class State:
    """An A/B smoothing choice at every crossing."""

    choices: tuple[str, ...]

    def __post_init__(self):
        for c in self.choices:
            if c not in ("A", "B"):
                raise ValueError(f"bad state letter {c!r}")

    @classmethod
    def all_a(cls, d: PlanarDiagram) -> "State":
        return cls(("A",) * d.n_crossings)

    @classmethod
    def all_b(cls, d: PlanarDiagram) -> "State":
        return cls(("B",) * d.n_crossings)

    @classmethod
    def from_bits(cls, bits: int, n: int) -> "State":
        """Bit i set means B-smoothing at crossing i."""
        return cls(tuple("B" if bits >> i & 1 else "A" for i in range(n)))

    def __len__(self):
        return len(self.choices)

    def __getitem__(self, i):
        return self.choices[i]


def dual_state(s: State) -> State:
    """Flip A and B at every crossing."""
    return State(tuple("B" if c == "A" else "A" for c in s.choices))


def _splice_pairs(choice: str) -> list[tuple[int, int]]:
    # Strand k of a crossing joins the listed port pair.
    return [(0, 1), (2, 3)] if choice == "A" else [(1, 2), (3, 0)]


@dataclass(frozen=True)
class StateCircles:
    """The circles of a smoothed diagram with plane nesting data.

    Each circle is a cyclic sequence of (crossing, strand) chord-end
    markers in the circle's traversal order; ``strand`` is 0 or 1, naming
    one of the two smoothing arcs at that crossing.
    """

    circles: tuple[tuple[tuple[int, int], ...], ...]
    nesting_depth: tuple[int, ...]
    orientation: tuple[str, ...]  # 'ccw' or 'cw' per circle

    def __len__(self):
        return len(self.circles)


class _UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        p = self.parent.setdefault(x, x)
        if p != x:
            p = self.parent[x] = self.find(p)
        return p

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def trace_state_circles(
    d: PlanarDiagram, s: State, root_corner: Port | None = None
) -> StateCircles:
    """Smooth every crossing per the state and trace the plane circles.

    Nesting depths come from the face-containment tree of the smoothed
    diagram, rooted at a deterministic outer face (or at the face holding
    ``root_corner``, for re-rooting checks).  A circle is traversed
    counterclockwise when its nesting depth is even, clockwise when odd;
    combinatorially, counterclockwise means the inner face lies to the
    traversal's left.
    """
    if len(s) != d.n_crossings:
        raise ValueError("state size does not match diagram")
    if not d.crossings:
        n = max(d.unknot_components, 1)
        return StateCircles(
            ((),) * n, (0,) * n, ("ccw",) * n
        )

    splice: dict[Port, tuple[Port, int]] = {}
    for ci in range(d.n_crossings):
        for k, (i, j) in enumerate(_splice_pairs(s[ci])):
            splice[(ci, i)] = ((ci, j), k)
            splice[(ci, j)] = ((ci, i), k)

    # Faces of the smoothed diagram: union-find over crossing corners.
    # Corner (c, k) sits between ports k and k+1 (counterclockwise).
    uf = _UnionFind()
    for ci in range(d.n_crossings):
        if s[ci] == "A":
            uf.union((ci, 1), (ci, 3))
        else:
            uf.union((ci, 0), (ci, 2))
    for p, q in d.arc_partner.items():
        (c1, i1), (c2, i2) = p, q
        uf.union((c1, i1), (c2, (i2 - 1) % 4))

    # Trace each circle once, in an arbitrary direction, recording the
    # chord ends passed and the face class on each side.
    circles = []
    sides = []  # (left_face, right_face) per circle, for traced direction
    visited: set[Port] = set()
    for start in d.ports():
        if start in visited:
            continue
        seq = []
        lefts, rights = set(), set()
        p = start
        while True:
            ci, i = p
            (cj, j), strand = splice[p]
            visited.add(p)
            visited.add((cj, j))
            seq.append((ci, strand))
            lefts.add(uf.find((ci, (i - 1) % 4)))
            lefts.add(uf.find((cj, j)))
            rights.add(uf.find((ci, i)))
            rights.add(uf.find((cj, (j - 1) % 4)))
            p = d.arc_partner[(cj, j)]
            if p == start:
                break
        if len(lefts) != 1 or len(rights) != 1:
            raise AssertionError("circle sides are not single faces")
        circles.append(seq)
        sides.append((lefts.pop(), rights.pop()))

    faces = {uf.find((ci, k)) for ci in range(d.n_crossings) for k in range(4)}
    if d.is_connected and len(faces) != len(circles) + 1:
        raise AssertionError("face count != circle count + 1")

    # Outer face: the designated side of the lowest edge label.
    if root_corner is None:
        lab = min(d.arc_partner, key=lambda p: (d.label_at(p), p))
        root_corner = lab
    outer = uf.find(root_corner)

    # Face-circle incidence tree, rooted at the outer face.
    adj: dict = {f: [] for f in faces}
    for idx, (lf, rf) in enumerate(sides):
        if lf == rf:
            raise AssertionError("circle does not separate the sphere")
        adj[lf].append((rf, idx))
        adj[rf].append((lf, idx))
    depth = {outer: 0}
    queue = [outer]
    while queue:
        f = queue.pop(0)
        for g, _ in adj[f]:
            if g not in depth:
                depth[g] = depth[f] + 1
                queue.append(g)
    if len(depth) != len(faces):
        raise AssertionError("face tree is not connected")

    out_circles = []
    depths = []
    orients = []
    for idx, seq in enumerate(circles):
        lf, rf = sides[idx]
        dep = min(depth[lf], depth[rf])
        inner = lf if depth[lf] > depth[rf] else rf
        ccw = dep % 2 == 0
        # Counterclockwise traversal keeps the inner face on the left.
        want_left = inner if ccw else (rf if inner == lf else lf)
        if want_left != lf:
            seq = seq[::-1]
        out_circles.append(tuple(seq))
        depths.append(dep)
        orients.append("ccw" if ccw else "cw")
    return StateCircles(tuple(out_circles), tuple(depths), tuple(orients))


# -- parsing -----------------------------------------------------------

_TERM_RE = re.compile(r"^[Xx]\[(\d+),(\d+),(\d+),(\d+)\]$")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse whitespace-separated crossing terms ``X[a,b,c,d]``.

    Empty input denotes the 0-crossing unknot diagram.
    """
    tokens = text.split()
    if not tokens:
        return PlanarDiagram((), unknot_components=1)
    crossings = []
    for idx, tok in enumerate(tokens):
        m = _TERM_RE.match(tok)
        if not m:
            raise PDSyntaxError(f"crossing {idx}: malformed term {tok!r}")
        labs = tuple(int(g) for g in m.groups())
        if any(lab <= 0 for lab in labs):
            raise PDSyntaxError(f"crossing {idx}: labels must be positive")
        crossings.append(labs)
    return PlanarDiagram(tuple(crossings))


def parse_braid(word: str) -> PlanarDiagram:
    """PD code of the closure of a braid word of signed generator indices."""
    gens = [int(t) for t in word.split()]
    if any(g == 0 for g in gens):
        raise BraidIndexError("generator index 0 is not valid")
    if not gens:
        return PlanarDiagram((), unknot_components=1)
    if any(abs(g) < 1 for g in gens):
        raise BraidIndexError("generator indices start at 1")
    n = max(abs(g) for g in gens) + 1

    next_label = 1
    initial = []
    cur = []
    for _ in range(n):
        initial.append(next_label)
        cur.append(next_label)
        next_label += 1
    crossings = []
    for g in gens:
        i = abs(g) - 1  # left strand position
        in1, in2 = cur[i], cur[i + 1]
        out1, out2 = next_label, next_label + 1
        next_label += 2
        if g > 0:
            # Left strand passes over: under enters bottom-right.
            crossings.append((in2, out2, out1, in1))
        else:
            # Left strand passes under: under enters bottom-left.
            crossings.append((in1, in2, out2, out1))
        cur[i], cur[i + 1] = out1, out2

    # Close the braid: the top label of each position is the same arc as
    # its bottom label.
    rename = {}
    unknots = 0
    for s in range(n):
        if cur[s] == initial[s]:
            unknots += 1  # untouched strand closes to a free circle
        else:
            rename[cur[s]] = initial[s]
    crossings = [
        tuple(rename.get(lab, lab) for lab in cr) for cr in crossings
    ]
    # Compact labels to 1..2c while keeping sequential order.
    labs = sorted({lab for cr in crossings for lab in cr})
    compact = {lab: k + 1 for k, lab in enumerate(labs)}
    crossings = [tuple(compact[lab] for lab in cr) for cr in crossings]
    return PlanarDiagram(tuple(crossings), unknot_components=unknots)
