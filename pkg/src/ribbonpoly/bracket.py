"""Kauffman bracket, Jones polynomial, adequacy and genus bounds.

The bracket is computed two ways: a direct state sum over all smoothings
(the oracle, capped by crossing count) and the specialization of the
three-variable polynomial of the all-A ribbon graph.  Both agree exactly;
the verification harness and the test suite enforce this.
"""

from __future__ import annotations

from dataclasses import dataclass

from .brt import brt_recursive, brt_subgraph
from .diagram import (
    PlanarDiagram,
    State,
    TooManyCrossings,
    writhe,
)
from .polynomials import LaurentA, LaurentT, delta_power, specialize_brt, substitute_t
from .state_ribbon import all_a, all_b, turaev_genus_of_diagram

DEFAULT_STATESUM_CAP = 22


def _count_circles(d: PlanarDiagram, bits: int) -> int:
    """Circles of the smoothing where bit i set means B at crossing i."""
    n = d.n_crossings
    if n == 0:
        return max(d.unknot_components, 1)
    # Union-find over ports under arc joins and splice joins.
    size = 4 * n
    parent = list(range(size))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[ry] = rx

    for (c1, i1), (c2, i2) in d.arc_partner.items():
        union(4 * c1 + i1, 4 * c2 + i2)
    for ci in range(n):
        if bits >> ci & 1:
            union(4 * ci + 1, 4 * ci + 2)
            union(4 * ci + 3, 4 * ci)
        else:
            union(4 * ci, 4 * ci + 1)
            union(4 * ci + 2, 4 * ci + 3)
    circles = len({find(x) for x in range(size)})
    return circles + d.unknot_components


def bracket_statesum(
    d: PlanarDiagram, cap: int = DEFAULT_STATESUM_CAP
) -> LaurentA:
    """Sum over all 2^c states of A^(#A - #B) * delta^(circles - 1)."""
    n = d.n_crossings
    if n > cap:
        raise TooManyCrossings(f"{n} crossings exceeds statesum cap {cap}")
    total: dict = {}
    for bits in range(1 << n):
        nb = bits.bit_count()
        shift = n - 2 * nb  # (#A) - (#B)
        circles = _count_circles(d, bits)
        for k, c in delta_power(circles - 1).terms.items():
            key = k + shift
            total[key] = total.get(key, 0) + c
    return LaurentA(total)


def bracket_via_brt(d: PlanarDiagram, method: str = "subgraph") -> LaurentA:
    """The bracket as the specialization of the all-A graph polynomial."""
    d.require_connected()
    g = all_a(d)
    if method == "recursive":
        poly = brt_recursive(g)
    elif method == "subgraph":
        poly = brt_subgraph(g)
    elif method == "tree":
        from .brt import brt_tree_expansion

        poly = brt_tree_expansion(g)
    else:
        raise ValueError(f"unknown method {method!r}")
    return specialize_brt(poly, g.counts.e, g.counts.v)


def jones(d: PlanarDiagram, method: str = "subgraph") -> LaurentT:
    """Normalized bracket in the variable t (quarter-integer exponents)."""
    d.require_connected()
    out = substitute_t(bracket_via_brt(d, method=method), writhe(d))
    if d.component_count == 1 and out:
        assert out.has_integer_exponents()
    return out


@dataclass(frozen=True)
class Adequacy:
    a_adequate: bool
    b_adequate: bool

    @property
    def adequate(self) -> bool:
        return self.a_adequate and self.b_adequate


def adequacy(d: PlanarDiagram) -> Adequacy:
    """A diagram is A-adequate when its all-A graph has no loop edges."""
    d.require_connected()
    ga, gb = all_a(d), all_b(d)
    return Adequacy(
        a_adequate=not any(ga.is_loop(e) for e in ga.edges),
        b_adequate=not any(gb.is_loop(e) for e in gb.edges),
    )


@dataclass(frozen=True)
class SpanBounds:
    m_bound: int  # upper bound for the max power of A in the bracket
    m_lower: int  # lower bound for the min power of A
    span_bound: int
    exact_if_adequate: int | None  # exact bracket span when adequate


def span_bounds(d: PlanarDiagram) -> SpanBounds:
    """Degree bounds e + 2v - 2 and -(e + 2v' - 2) for the bracket."""
    d.require_connected()
    e = d.n_crossings
    v = all_a(d).counts.v
    vp = all_b(d).counts.v
    mb = e + 2 * v - 2
    ml = -e - 2 * vp + 2
    exact = None
    if adequacy(d).adequate:
        exact = 2 * e + 2 * v + 2 * vp - 4
    return SpanBounds(
        m_bound=mb, m_lower=ml, span_bound=mb - ml, exact_if_adequate=exact
    )


@dataclass(frozen=True)
class TuraevGenusBound:
    genus_of_diagram: int
    upper_bound_from_span: int


def turaev_genus_bound(d: PlanarDiagram) -> TuraevGenusBound:
    """Diagram genus and the crossings-minus-Jones-span upper bound."""
    d.require_connected()
    g = turaev_genus_of_diagram(d)
    span_t = jones(d).span_numerator // 4
    bound = d.n_crossings - span_t
    assert g <= bound
    return TuraevGenusBound(genus_of_diagram=g, upper_bound_from_span=bound)


@dataclass(frozen=True)
class GenusCertificate:
    genus: int
    certified_invariant: bool


def genus_invariance_certificate(d: PlanarDiagram) -> GenusCertificate:
    """For adequate diagrams the all-A genus is a link invariant.

    The witness identity 4g = 4e - span<P> is checked before certifying.
    """
    d.require_connected()
    if not adequacy(d).adequate:
        return GenusCertificate(genus=all_a(d).counts.g, certified_invariant=False)
    g = all_a(d).counts.g
    span = bracket_via_brt(d).span
    assert 4 * g == 4 * d.n_crossings - span
    return GenusCertificate(genus=g, certified_invariant=True)
