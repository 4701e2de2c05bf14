"""Exact sparse polynomial arithmetic.

Three rings are provided:

* :class:`MultiPoly` -- Z[X, Y, Z], used for the three-variable ribbon-graph
  polynomial of a link diagram.
* :class:`LaurentA` -- Z[A, A^-1], used for the Kauffman bracket.
* :class:`LaurentT` -- Laurent polynomials in t with quarter-integer
  exponents (stored as integer numerators over the fixed denominator 4),
  used for the Jones polynomial.

All coefficients are Python ints (arbitrary precision).  The zero polynomial
is the empty term map; no stored coefficient is ever zero.  Values are
immutable after construction and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Tuple

Triple = Tuple[int, int, int]


class NegativeDeltaExponent(ValueError):
    """A monomial X^a Y^b Z^g with b < 2g cannot be specialized division-free.

    Such a monomial never occurs in the polynomial of an actual ribbon graph
    (termwise b - 2g = f - k >= 0), so this signals invalid input.
    """


def _clean(terms: dict) -> dict:
    return {k: c for k, c in terms.items() if c != 0}


class MultiPoly:
    """Sparse polynomial in Z[X, Y, Z] with non-negative exponents."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Triple, int] | None = None):
        self.terms: dict = _clean(dict(terms or {}))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def monomial(cls, a: int, b: int, c: int, coeff: int = 1) -> "MultiPoly":
        if a < 0 or b < 0 or c < 0:
            raise ValueError("MultiPoly exponents must be non-negative")
        return cls({(a, b, c): coeff})

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({(0, 0, 0): c})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return MultiPoly(terms)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) - c
        return MultiPoly(terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return MultiPoly({k: c * other for k, c in self.terms.items()})
        terms: dict = {}
        for (a1, b1, c1), x in self.terms.items():
            for (a2, b2, c2), y in other.terms.items():
                k = (a1 + a2, b1 + b2, c1 + c2)
                terms[k] = terms.get(k, 0) + x * y
        return MultiPoly(terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection ----------------------------------------------------

    def sorted_terms(self) -> list:
        """Terms in graded-lexicographic order of (a, b, c)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    def to_json_obj(self) -> list:
        return [{"exp": list(k), "coeff": str(c)} for k, c in self.sorted_terms()]

    def __repr__(self) -> str:
        if not self.terms:
            return "MultiPoly(0)"
        bits = []
        for (a, b, c), coeff in self.sorted_terms():
            mono = "".join(
                f"{v}^{e}" if e > 1 else v
                for v, e in (("X", a), ("Y", b), ("Z", c))
                if e
            )
            bits.append(f"{coeff}*{mono}" if mono else str(coeff))
        return "MultiPoly(" + " + ".join(bits) + ")"


class LaurentA:
    """Sparse Laurent polynomial in Z[A, A^-1]."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict = _clean(dict(terms or {}))

    @classmethod
    def zero(cls) -> "LaurentA":
        return cls()

    @classmethod
    def one(cls) -> "LaurentA":
        return cls({0: 1})

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> "LaurentA":
        return cls({k: coeff})

    def __add__(self, other: "LaurentA") -> "LaurentA":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentA(terms)

    def __sub__(self, other: "LaurentA") -> "LaurentA":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) - c
        return LaurentA(terms)

    def __neg__(self) -> "LaurentA":
        return LaurentA({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentA({k: c * other for k, c in self.terms.items()})
        terms: dict = {}
        for k1, x in self.terms.items():
            for k2, y in other.terms.items():
                k = k1 + k2
                terms[k] = terms.get(k, 0) + x * y
        return LaurentA(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentA":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        out = LaurentA.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentA":
        """Multiply by A^k."""
        return LaurentA({e + k: c for e, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentA) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return min(self.terms)

    @property
    def max_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(self.terms)

    @property
    def span(self) -> int:
        return self.max_degree - self.min_degree

    def invert_variable(self) -> "LaurentA":
        """The image under A -> A^-1."""
        return LaurentA({-k: c for k, c in self.terms.items()})

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def to_json_obj(self) -> list:
        return [{"exp": k, "coeff": str(c)} for k, c in self.sorted_terms()]

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentA(0)"
        bits = [
            (f"{c}*A^{k}" if k else str(c)) for k, c in self.sorted_terms()
        ]
        return "LaurentA(" + " + ".join(bits) + ")"


#: The unlinked-circle factor -A^2 - A^-2.
DELTA = LaurentA({2: -1, -2: -1})


class LaurentT:
    """Laurent polynomial in t with exponents in (1/4)Z.

    Keys of the term map are the integer numerators of the exponents over
    the fixed denominator 4: the key k represents t^(k/4).
    """

    __slots__ = ("terms",)

    DENOM = 4

    def __init__(self, terms: Mapping[int, int] | None = None):
        self.terms: dict = _clean(dict(terms or {}))

    @classmethod
    def one(cls) -> "LaurentT":
        return cls({0: 1})

    def __add__(self, other: "LaurentT") -> "LaurentT":
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return LaurentT(terms)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentT({k: c * other for k, c in self.terms.items()})
        terms: dict = {}
        for k1, x in self.terms.items():
            for k2, y in other.terms.items():
                k = k1 + k2
                terms[k] = terms.get(k, 0) + x * y
        return LaurentT(terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentT) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def has_integer_exponents(self) -> bool:
        return all(k % self.DENOM == 0 for k in self.terms)

    @property
    def span_numerator(self) -> int:
        """max - min of exponent numerators (4x the span in t)."""
        if not self.terms:
            raise ValueError("zero polynomial has no span")
        return max(self.terms) - min(self.terms)

    def span_t(self):
        """Span in the variable t, as an exact Fraction."""
        from fractions import Fraction

        return Fraction(self.span_numerator, self.DENOM)

    def sorted_terms(self) -> list:
        return sorted(self.terms.items())

    def to_json_obj(self) -> list:
        return [{"exp": k, "coeff": str(c)} for k, c in self.sorted_terms()]

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentT(0)"
        bits = []
        for k, c in self.sorted_terms():
            if k == 0:
                bits.append(str(c))
            elif k % 4 == 0:
                bits.append(f"{c}*t^{k // 4}")
            else:
                bits.append(f"{c}*t^({k}/4)")
        return "LaurentT(" + " + ".join(bits) + ")"


def delta_power(n: int, _cache: dict = {}) -> LaurentA:
    """(-A^2 - A^-2)^n, cached."""
    if n < 0:
        raise ValueError("delta_power needs n >= 0")
    if n not in _cache:
        _cache[n] = DELTA ** n
    return _cache[n]


def specialize_brt(c: MultiPoly, e: int, v: int) -> LaurentA:
    """Specialize a ribbon-graph polynomial to the Kauffman bracket.

    Returns A^e * A^(2-2v) * c(X -> -A^4, Y -> A^-2 * delta, Z -> delta^-2)
    with delta = -A^2 - A^-2.  The substitution is carried out division-free:
    a monomial X^a Y^b Z^g contributes (-A^4)^a * A^(-2b) * delta^(b - 2g),
    which is a genuine Laurent polynomial whenever b >= 2g.

    Raises:
        NegativeDeltaExponent: if some monomial has b < 2g.
    """
    out: dict = {}
    for (a, b, g), coeff in c.terms.items():
        if b < 2 * g:
            raise NegativeDeltaExponent(
                f"monomial X^{a} Y^{b} Z^{g} has delta exponent {b - 2 * g} < 0"
            )
        sign = -1 if a % 2 else 1
        base_shift = 4 * a - 2 * b
        for k, dc in delta_power(b - 2 * g).terms.items():
            key = base_shift + k
            out[key] = out.get(key, 0) + sign * coeff * dc
    return LaurentA(out).shift(e + 2 - 2 * v)


def substitute_t(b: LaurentA, w: int) -> LaurentT:
    """Normalize a bracket by (-A)^(-3w) and substitute A = t^(-1/4).

    A term coeff * A^k maps to (-1)^w * coeff * t^((3w - k)/4); the result
    keys are the integer numerators 3w - k.
    """
    sign = -1 if w % 2 else 1
    return LaurentT({3 * w - k: sign * c for k, c in b.terms.items()})
