"""Exact arithmetic in finitely presented graded-commutative algebras.

Coefficients are either Z_m (m >= 2, exact representatives in [0, m)) or Q
(exact fractions).  Generators are exterior (square-zero, odd degree) or
truncated-polynomial (x^height = 0).  Products carry Koszul signs: swapping
two odd-degree letters contributes a factor of -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Union

from .errors import (
    DegreeOverflowError,
    MixedDegreeError,
    PresentationError,
    RingMismatchError,
)

Coefficient = Union[int, Fraction]
Exponents = tuple  # one entry per generator of the presentation

EXTERIOR = "exterior"
TRUNCATED_POLY = "poly"


@dataclass(frozen=True)
class CoefficientRing:
    """Z_m when modulus is set, Q otherwise."""

    modulus: Optional[int] = None

    def __post_init__(self):
        if self.modulus is not None and self.modulus < 2:
            raise PresentationError("modulus must be >= 2, got %r" % (self.modulus,))

    @classmethod
    def modular(cls, m: int) -> "CoefficientRing":
        return cls(modulus=m)

    @classmethod
    def rational(cls) -> "CoefficientRing":
        return cls(modulus=None)

    @property
    def is_modular(self) -> bool:
        return self.modulus is not None

    def normalize(self, c: Coefficient) -> Coefficient:
        if self.modulus is not None:
            return int(c) % self.modulus
        return Fraction(c)

    def add(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.normalize(a + b)

    def mul(self, a: Coefficient, b: Coefficient) -> Coefficient:
        return self.normalize(a * b)

    def neg(self, a: Coefficient) -> Coefficient:
        # For Z_m the negation of r is m - r; normalize handles it exactly.
        return self.normalize(-a)

    def is_zero(self, a: Coefficient) -> bool:
        return self.normalize(a) == 0

    def __str__(self):
        return "Q" if self.modulus is None else "Z_%d" % self.modulus


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    kind: str = EXTERIOR
    height: Optional[int] = None

    def __post_init__(self):
        if self.degree < 1:
            raise PresentationError("generator %s must have positive degree" % self.name)
        if self.kind == EXTERIOR:
            if self.degree % 2 == 0:
                raise PresentationError(
                    "exterior generator %s must have odd degree" % self.name
                )
            if self.height is not None:
                raise PresentationError("exterior generator %s takes no height" % self.name)
        elif self.kind == TRUNCATED_POLY:
            if self.height is None or self.height < 2:
                raise PresentationError(
                    "truncated-poly generator %s needs height >= 2" % self.name
                )
        else:
            raise PresentationError("unknown generator kind %r" % (self.kind,))

    @property
    def exponent_bound(self) -> int:
        """Exclusive upper bound on exponents in canonical monomials."""
        return 2 if self.kind == EXTERIOR else self.height  # type: ignore[return-value]


def exterior(name: str, degree: int) -> Generator:
    return Generator(name, degree, EXTERIOR)


def truncated_poly(name: str, degree: int, height: int) -> Generator:
    return Generator(name, degree, TRUNCATED_POLY, height)


class AlgebraPresentation:
    """Fixed ordered generator list with a degree cutoff.

    Monomials are exponent tuples aligned with the generator order.  In
    strict mode a product whose degree exceeds max_degree raises; in lenient
    mode overflowing terms are dropped and the result is marked truncated.
    """

    def __init__(
        self,
        ring: CoefficientRing,
        generators,
        max_degree: int = 8,
        strict: bool = True,
    ):
        generators = tuple(generators)
        names = [g.name for g in generators]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator names: %r" % (names,))
        for g in generators:
            if (
                g.kind == TRUNCATED_POLY
                and g.degree % 2 == 1
                and ring.modulus != 2
            ):
                # An odd-degree letter with nonzero square only exists in
                # characteristic 2.
                raise PresentationError(
                    "odd-degree truncated-poly generator %s requires Z_2 coefficients"
                    % g.name
                )
        if max_degree < 1:
            raise PresentationError("max_degree must be positive")
        self.ring = ring
        self.generators = generators
        self.max_degree = max_degree
        self.strict = strict
        self.index = {g.name: i for i, g in enumerate(generators)}
        self._degrees = tuple(g.degree for g in generators)
        self._odd = tuple(g.degree % 2 for g in generators)
        self._bounds = tuple(g.exponent_bound for g in generators)
        # Optional back-reference set by TensorPower on flattened algebras.
        self.tensor_factors = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraPresentation)
            and self.ring == other.ring
            and self.generators == other.generators
            and self.max_degree == other.max_degree
        )

    def __hash__(self):
        return hash((self.ring, self.generators, self.max_degree))

    def compatible(self, other: "AlgebraPresentation") -> bool:
        return self is other or self == other

    def __repr__(self):
        return "AlgebraPresentation(%s; %s)" % (
            self.ring,
            ", ".join(g.name for g in self.generators),
        )

    # -- monomials --------------------------------------------------------

    @property
    def unit_monomial(self) -> Exponents:
        return (0,) * len(self.generators)

    def monomial_degree(self, exps: Exponents) -> int:
        return sum(e * d for e, d in zip(exps, self._degrees))

    def monomial_is_canonical(self, exps: Exponents) -> bool:
        return len(exps) == len(self.generators) and all(
            0 <= e < b for e, b in zip(exps, self._bounds)
        )

    def multiply_monomials(self, a: Exponents, b: Exponents):
        """Return (exponents, sign) for the product, or None if it vanishes.

        The sign counts transpositions of odd-degree letters needed to merge
        the word of b into the word of a (generator order is fixed).
        """
        merged = []
        for e1, e2, bound in zip(a, b, self._bounds):
            e = e1 + e2
            if e >= bound:
                return None
            merged.append(e)
        swaps = 0
        odd_suffix = 0  # odd letters of a strictly to the right of position j
        for j in range(len(a) - 1, -1, -1):
            if self._odd[j]:
                if b[j]:
                    swaps += b[j] * odd_suffix
                odd_suffix += a[j]
        return tuple(merged), (-1 if swaps % 2 else 1)

    def basis_in_degree(self, d: int):
        """All canonical monomials of degree d, in lexicographic exponent order."""
        if d < 0 or d > self.max_degree:
            raise DegreeOverflowError(
                "degree %d outside [0, %d]" % (d, self.max_degree)
            )
        out = []
        exps = [0] * len(self.generators)

        def walk(i: int, remaining: int):
            if i == len(self.generators):
                if remaining == 0:
                    out.append(tuple(exps))
                return
            deg = self._degrees[i]
            for e in range(0, self._bounds[i]):
                if e * deg > remaining:
                    break
                exps[i] = e
                walk(i + 1, remaining - e * deg)
            exps[i] = 0

        walk(0, d)
        return out

    # -- element constructors --------------------------------------------

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self, coeff: Coefficient = 1) -> "Element":
        return Element(self, {self.unit_monomial: coeff})

    def gen(self, name: str, power: int = 1, coeff: Coefficient = 1) -> "Element":
        i = self.index[name]
        if power >= self._bounds[i]:
            return self.zero()
        exps = [0] * len(self.generators)
        exps[i] = power
        return Element(self, {tuple(exps): coeff})

    def monomial(self, exps: Exponents, coeff: Coefficient = 1) -> "Element":
        return Element(self, {tuple(exps): coeff})

    def element(self, terms: Mapping[Exponents, Coefficient]) -> "Element":
        return Element(self, dict(terms))


class Element:
    """A finite linear combination of canonical monomials over one presentation.

    Immutable by convention: all operations return fresh elements.  The
    `truncated` flag records that lenient-mode multiplication dropped terms
    past the degree cutoff.
    """

    __slots__ = ("presentation", "terms", "truncated")

    def __init__(self, presentation: AlgebraPresentation, terms, truncated=False):
        ring = presentation.ring
        clean = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if not presentation.monomial_is_canonical(exps):
                raise PresentationError("non-canonical monomial %r" % (exps,))
            c = ring.normalize(coeff)
            if c != 0:
                clean[exps] = c
        self.presentation = presentation
        self.terms = clean
        self.truncated = truncated

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self):
        p = self.presentation
        return sorted({p.monomial_degree(m) for m in self.terms})

    def homogeneous_degree(self) -> Optional[int]:
        """Common degree of all terms, None for the zero element."""
        ds = self.degrees()
        if not ds:
            return None
        if len(ds) > 1:
            raise MixedDegreeError("element has mixed degrees %r" % (ds,))
        return ds[0]

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def coefficient(self, exps: Exponents) -> Coefficient:
        return self.terms.get(tuple(exps), self.presentation.ring.normalize(0))

    def counit(self) -> Coefficient:
        """Coefficient of the unit monomial (projection to degree 0)."""
        return self.coefficient(self.presentation.unit_monomial)

    def sorted_terms(self):
        p = self.presentation
        return sorted(
            self.terms.items(), key=lambda kv: (p.monomial_degree(kv[0]), kv[0])
        )

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: "Element"):
        if not self.presentation.compatible(other.presentation):
            raise RingMismatchError(
                "elements over %r and %r" % (self.presentation, other.presentation)
            )

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        ring = self.presentation.ring
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = ring.add(terms.get(exps, 0), coeff)
        return Element(
            self.presentation, terms, truncated=self.truncated or other.truncated
        )

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        ring = self.presentation.ring
        return Element(
            self.presentation,
            {m: ring.neg(c) for m, c in self.terms.items()},
            truncated=self.truncated,
        )

    def scale(self, coeff: Coefficient) -> "Element":
        ring = self.presentation.ring
        c0 = ring.normalize(coeff)
        return Element(
            self.presentation,
            {m: ring.mul(c0, c) for m, c in self.terms.items()},
            truncated=self.truncated,
        )

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        p = self.presentation
        ring = p.ring
        terms: dict = {}
        truncated = self.truncated or other.truncated
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                merged = p.multiply_monomials(m1, m2)
                if merged is None:
                    continue
                exps, sign = merged
                if p.monomial_degree(exps) > p.max_degree:
                    if p.strict:
                        raise DegreeOverflowError(
                            "product degree %d exceeds cutoff %d"
                            % (p.monomial_degree(exps), p.max_degree)
                        )
                    truncated = True
                    continue
                c = ring.mul(c1, c2)
                if sign < 0:
                    c = ring.neg(c)
                terms[exps] = ring.add(terms.get(exps, 0), c)
        return Element(p, terms, truncated=truncated)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative power")
        out = self.presentation.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Element)
            and self.presentation.compatible(other.presentation)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        from .render import render_element

        return "<Element %s>" % render_element(self)
