"""Hopf-algebra structure on top of the graded engine.

Provides flattened tensor powers (so the module-level multiplication handles
all Koszul signs), induced algebra maps between presentations, coproducts,
the recursively computed antipode, Bockstein derivations, and an axiom
checker used to validate catalog data.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .errors import (
    BocksteinDataError,
    PresentationError,
)
from .graded import AlgebraPresentation, Element, Generator
from .render import render_element


class TensorPower:
    """H*(G^k) flattened into a single presentation with k copies of each
    generator, ordered factor by factor.  Graded commutativity of the
    flattened algebra reproduces the tensor-product sign rule."""

    def __init__(self, base: AlgebraPresentation, power: int):
        if base.tensor_factors is not None:
            raise PresentationError("tensor powers of tensor powers are not flattened twice")
        gens = []
        for i in range(power):
            for g in base.generators:
                gens.append(Generator("%s@%d" % (g.name, i), g.degree, g.kind, g.height))
        algebra = AlgebraPresentation(
            base.ring, gens, max_degree=base.max_degree, strict=base.strict
        )
        algebra.tensor_factors = (base, power)
        self.base = base
        self.power = power
        self.algebra = algebra
        self._width = len(base.generators)

    def embed(self, e: Element, factor: int) -> Element:
        """Embed an element of the base (or of a smaller tensor power) so that
        its factors occupy consecutive slots starting at `factor`."""
        src = e.presentation
        if src.tensor_factors is None:
            blocks = 1
            if not src.compatible(self.base):
                raise PresentationError("embed: element not over the base algebra")
        else:
            src_base, blocks = src.tensor_factors
            if not src_base.compatible(self.base):
                raise PresentationError("embed: element over a different base")
        if factor + blocks > self.power:
            raise PresentationError("embed: factors out of range")
        w = self._width
        shift = factor * w
        total = w * self.power
        terms = {}
        for exps, coeff in e.terms.items():
            out = [0] * total
            out[shift : shift + len(exps)] = exps
            terms[tuple(out)] = coeff
        return Element(self.algebra, terms)

    def split(self, exps) -> list:
        """Split a flattened exponent tuple into per-factor base tuples."""
        w = self._width
        return [tuple(exps[i * w : (i + 1) * w]) for i in range(self.power)]

    def factor_monomial(self, block) -> Element:
        return self.base.monomial(block)

    def switch(self) -> "InducedMap":
        """T*: the pullback of the factor swap (power 2 only)."""
        if self.power != 2:
            raise PresentationError("switch is defined on tensor squares")
        images = {}
        for g in self.base.generators:
            images["%s@0" % g.name] = self.embed(self.base.gen(g.name), 1)
            images["%s@1" % g.name] = self.embed(self.base.gen(g.name), 0)
        return InducedMap(self.algebra, self.algebra, images)


class InducedMap:
    """A degree-preserving algebra map given by generator images."""

    def __init__(
        self,
        source: AlgebraPresentation,
        target: AlgebraPresentation,
        images: Dict[str, Element],
        check: bool = True,
    ):
        self.source = source
        self.target = target
        self.images = images
        if check:
            self._validate()

    def _validate(self):
        for g in self.source.generators:
            if g.name not in self.images:
                raise PresentationError("no image for generator %s" % g.name)
            img = self.images[g.name]
            if not img.presentation.compatible(self.target):
                raise PresentationError("image of %s is over the wrong algebra" % g.name)
            if not img.is_zero() and img.homogeneous_degree() != g.degree:
                raise PresentationError(
                    "image of %s is not homogeneous of degree %d" % (g.name, g.degree)
                )
            # Relation check: the image must satisfy the generator's own
            # relation, as far as it is visible under the degree cutoff.
            bound = g.exponent_bound
            if g.degree * bound <= self.target.max_degree:
                if not (img ** bound).is_zero():
                    raise PresentationError(
                        "image of %s violates %s^%d = 0" % (g.name, g.name, bound)
                    )

    def apply(self, e: Element) -> Element:
        if not e.presentation.compatible(self.source):
            raise PresentationError("element is not over the map's source")
        out = self.target.zero()
        for exps, coeff in e.terms.items():
            acc = self.target.one(coeff)
            for g, power in zip(self.source.generators, exps):
                for _ in range(power):
                    acc = acc * self.images[g.name]
                if acc.is_zero():
                    break
            out = out + acc
        return out

    def after(self, other: "InducedMap") -> "InducedMap":
        """self ∘ other."""
        if not other.target.compatible(self.source):
            raise PresentationError("composition mismatch")
        images = {g.name: self.apply(other.images[g.name]) for g in other.source.generators}
        return InducedMap(other.source, self.target, images, check=False)

    @classmethod
    def identity(cls, p: AlgebraPresentation) -> "InducedMap":
        return cls(p, p, {g.name: p.gen(g.name) for g in p.generators}, check=False)


def compose(f: InducedMap, g: InducedMap) -> InducedMap:
    """f ∘ g (target of g must equal source of f)."""
    return f.after(g)


@dataclass(frozen=True)
class BocksteinData:
    """Images of the r-th Bockstein on generators; extended as a degree +1
    derivation with the sign rule b(uv) = b(u)v + (-1)^|u| u b(v)."""

    order: int
    images: Dict[str, Element] = field(default_factory=dict)

    def __post_init__(self):
        if self.order < 1:
            raise PresentationError("Bockstein order must be >= 1")


@dataclass
class Check:
    name: str
    ok: bool
    witness: Optional[str] = None


@dataclass
class HopfDiagnostics:
    checks: List[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self) -> Optional[Check]:
        for c in self.checks:
            if not c.ok:
                return c
        return None


class HopfPresentation:
    """An algebra presentation together with reduced coproducts and optional
    Bockstein data.  Generators without a reduced coproduct are primitive."""

    def __init__(
        self,
        algebra: AlgebraPresentation,
        reduced_coproducts: Dict[str, Element],
        bockstein: Optional[BocksteinData] = None,
        label: str = "",
    ):
        self.algebra = algebra
        self.reduced_coproducts = dict(reduced_coproducts)
        self.bockstein = bockstein
        self.label = label
        self.square = TensorPower(algebra, 2)
        self._powers = {1: None, 2: self.square}
        self._antipode: Optional[InducedMap] = None
        self._coproduct: Optional[InducedMap] = None
        self._structural_check()

    def _structural_check(self):
        sq = self.square
        for name, red in self.reduced_coproducts.items():
            if name not in self.algebra.index:
                raise PresentationError("coproduct for unknown generator %s" % name)
            g = self.algebra.generators[self.algebra.index[name]]
            if not red.presentation.compatible(sq.algebra):
                raise PresentationError(
                    "reduced coproduct of %s is not in the tensor square" % name
                )
            if not red.is_zero() and red.homogeneous_degree() != g.degree:
                raise PresentationError(
                    "reduced coproduct of %s has wrong degree" % name
                )
            for exps in red.terms:
                left, right = sq.split(exps)
                if not any(left) or not any(right):
                    raise PresentationError(
                        "reduced coproduct of %s has a unit factor term" % name
                    )
        if self.bockstein is not None:
            for name, img in self.bockstein.images.items():
                g = self.algebra.generators[self.algebra.index[name]]
                if not img.presentation.compatible(self.algebra):
                    raise PresentationError("Bockstein image of %s in wrong algebra" % name)
                if not img.is_zero() and img.homogeneous_degree() != g.degree + 1:
                    raise PresentationError(
                        "Bockstein image of %s must have degree %d" % (name, g.degree + 1)
                    )

    # -- coproduct --------------------------------------------------------

    def tensor_power(self, k: int) -> TensorPower:
        tp = self._powers.get(k)
        if tp is None:
            tp = TensorPower(self.algebra, k)
            self._powers[k] = tp
        return tp

    def coproduct_map(self) -> InducedMap:
        if self._coproduct is None:
            sq = self.square
            images = {}
            for g in self.algebra.generators:
                img = sq.embed(self.algebra.gen(g.name), 0) + sq.embed(
                    self.algebra.gen(g.name), 1
                )
                red = self.reduced_coproducts.get(g.name)
                if red is not None:
                    img = img + red
                images[g.name] = img
            self._coproduct = InducedMap(self.algebra, sq.algebra, images, check=False)
        return self._coproduct

    def coproduct(self, e: Element) -> Element:
        return self.coproduct_map().apply(e)

    def counit(self, e: Element):
        return e.counit()

    # -- antipode ---------------------------------------------------------

    def antipode_map(self) -> InducedMap:
        """c*: computed degreewise from the null-homotopy of g ↦ g·g⁻¹,
        which forces c(g) = -g - Σ L·c(R) over the reduced coproduct terms."""
        if self._antipode is not None:
            return self._antipode
        alg = self.algebra
        sq = self.square
        images: Dict[str, Element] = {}

        def image_of_block(block) -> Element:
            # c applied to a base monomial whose letters all have images already
            acc = alg.one()
            for g, power in zip(alg.generators, block):
                for _ in range(power):
                    if g.name not in images:
                        raise PresentationError(
                            "antipode recursion hit %s before it was computed" % g.name
                        )
                    acc = acc * images[g.name]
            return acc

        for g in sorted(alg.generators, key=lambda g: g.degree):
            acc = -alg.gen(g.name)
            red = self.reduced_coproducts.get(g.name)
            if red is not None:
                for exps, coeff in red.terms.items():
                    left, right = sq.split(exps)
                    term = alg.monomial(left, coeff) * image_of_block(right)
                    acc = acc - term
            images[g.name] = acc
        self._antipode = InducedMap(alg, alg, images, check=False)
        return self._antipode

    def antipode(self, e: Element) -> Element:
        return self.antipode_map().apply(e)

    # -- Bockstein --------------------------------------------------------

    def _bockstein_images_for(self, p: AlgebraPresentation) -> Dict[int, Element]:
        if self.bockstein is None:
            raise BocksteinDataError("presentation %s carries no Bockstein data" % self.label)
        base_images = self.bockstein.images
        if p.compatible(self.algebra):
            return {
                self.algebra.index[name]: img for name, img in base_images.items()
            }
        if p.tensor_factors is not None and p.tensor_factors[0].compatible(self.algebra):
            k = p.tensor_factors[1]
            tp = self.tensor_power(k)
            out = {}
            for name, img in base_images.items():
                for i in range(k):
                    out[i * len(self.algebra.generators) + self.algebra.index[name]] = (
                        tp.embed(img, i)
                    )
            return out
        raise BocksteinDataError("element is not over this presentation or a tensor power")

    def apply_bockstein(self, e: Element) -> Element:
        """Extend the generator data as a Koszul-signed derivation; works on
        base elements and on elements of any tensor power of the base."""
        p = e.presentation
        images = self._bockstein_images_for(p)
        out = p.zero()
        n = len(p.generators)
        for exps, coeff in e.terms.items():
            prefix_deg = 0
            for idx in range(n):
                cnt = exps[idx]
                if cnt == 0:
                    continue
                g = p.generators[idx]
                img = images.get(idx)
                if img is None:
                    raise BocksteinDataError(
                        "no Bockstein image for generator %s" % g.name
                    )
                for t in range(cnt):
                    sign = -1 if (prefix_deg + t * g.degree) % 2 else 1
                    left = list(exps[:idx]) + [t] + [0] * (n - idx - 1)
                    right = [0] * idx + [cnt - 1 - t] + list(exps[idx + 1 :])
                    term = (
                        p.monomial(tuple(left), coeff)
                        * img
                        * p.monomial(tuple(right))
                    )
                    out = out + (term if sign > 0 else -term)
                prefix_deg += cnt * g.degree
        return out


def switch_map(square: TensorPower, e: Element) -> Element:
    """T*(u⊗v) = (-1)^{|u||v|} v⊗u on a flattened tensor square."""
    return square.switch().apply(e)


# -- axiom verification ---------------------------------------------------


def verify_hopf_axioms(h: HopfPresentation) -> HopfDiagnostics:
    """Run every structural law the catalog relies on; never raises, reports
    the first witness per failed check."""
    checks: List[Check] = []
    alg = h.algebra
    sq = h.square
    mu = h.coproduct_map()

    # coassociativity: (mu ⊗ 1) mu = (1 ⊗ mu) mu on every generator
    try:
        cube = h.tensor_power(3)
        left_images = {}
        right_images = {}
        for g in alg.generators:
            img = mu.images[g.name]
            left_images["%s@0" % g.name] = cube.embed(img, 0)
            left_images["%s@1" % g.name] = cube.embed(alg.gen(g.name), 2)
            right_images["%s@0" % g.name] = cube.embed(alg.gen(g.name), 0)
            right_images["%s@1" % g.name] = cube.embed(img, 1)
        left = InducedMap(sq.algebra, cube.algebra, left_images, check=False)
        right = InducedMap(sq.algebra, cube.algebra, right_images, check=False)
        witness = None
        for g in alg.generators:
            a = left.apply(mu.images[g.name])
            b = right.apply(mu.images[g.name])
            if a != b:
                witness = g.name
                break
        checks.append(Check("coassociativity", witness is None, witness))
    except Exception as exc:  # inconsistent data can make the maps unbuildable
        checks.append(Check("coassociativity", False, str(exc)))

    # counit: both partial counits of mu*(g) give back g
    witness = None
    for g in alg.generators:
        img = mu.images[g.name]
        left_part = alg.zero()
        right_part = alg.zero()
        for exps, coeff in img.terms.items():
            lblock, rblock = sq.split(exps)
            if not any(lblock):
                left_part = left_part + alg.monomial(rblock, coeff)
            if not any(rblock):
                right_part = right_part + alg.monomial(lblock, coeff)
        if left_part != alg.gen(g.name) or right_part != alg.gen(g.name):
            witness = g.name
            break
    checks.append(Check("counit", witness is None, witness))

    # antipode identity: multiply ∘ (1 ⊗ c) ∘ mu = unit ∘ counit
    try:
        c = h.antipode_map()
        one_c = InducedMap(
            sq.algebra,
            sq.algebra,
            {
                **{
                    "%s@0" % g.name: sq.embed(alg.gen(g.name), 0)
                    for g in alg.generators
                },
                **{
                    "%s@1" % g.name: sq.embed(c.images[g.name], 1)
                    for g in alg.generators
                },
            },
            check=False,
        )
        mult = InducedMap(
            sq.algebra,
            alg,
            {
                **{"%s@0" % g.name: alg.gen(g.name) for g in alg.generators},
                **{"%s@1" % g.name: alg.gen(g.name) for g in alg.generators},
            },
            check=False,
        )
        witness = None
        for d in range(1, alg.max_degree + 1):
            for exps in alg.basis_in_degree(d):
                e = alg.monomial(exps)
                if not mult.apply(one_c.apply(mu.apply(e))).is_zero():
                    witness = render_element(e)
                    break
            if witness:
                break
        checks.append(Check("antipode-identity", witness is None, witness))
    except Exception as exc:
        checks.append(Check("antipode-identity", False, str(exc)))

    # antipode involution (graded-commutative case)
    try:
        c = h.antipode_map()
        cc = c.after(c)
        witness = None
        for g in alg.generators:
            if cc.images[g.name] != alg.gen(g.name):
                witness = g.name
                break
        checks.append(Check("antipode-involution", witness is None, witness))
    except Exception as exc:
        checks.append(Check("antipode-involution", False, str(exc)))

    # graded commutativity on basis pairs
    witness = None
    half = alg.max_degree // 2
    for d1 in range(1, half + 1):
        for d2 in range(d1, alg.max_degree - d1 + 1):
            for m1 in alg.basis_in_degree(d1):
                for m2 in alg.basis_in_degree(d2):
                    a = alg.monomial(m1)
                    b = alg.monomial(m2)
                    ba = b * a
                    if d1 * d2 % 2:
                        ba = -ba
                    if a * b != ba:
                        witness = "%s, %s" % (render_element(a), render_element(b))
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    checks.append(Check("graded-commutativity", witness is None, witness))

    if h.bockstein is not None:
        # beta squared vanishes on every generator with data
        witness = None
        try:
            for name in h.bockstein.images:
                b1 = h.apply_bockstein(alg.gen(name))
                if not h.apply_bockstein(b1).is_zero():
                    witness = name
                    break
            checks.append(Check("bockstein-squared", witness is None, witness))
        except BocksteinDataError as exc:
            checks.append(Check("bockstein-squared", False, str(exc)))

        # Leibniz on products of generators with data
        witness = None
        try:
            named = sorted(h.bockstein.images)
            for n1 in named:
                for n2 in named:
                    a = alg.gen(n1)
                    b = alg.gen(n2)
                    ab = a * b
                    lhs = h.apply_bockstein(ab)
                    rhs = h.apply_bockstein(a) * b
                    bb = a * h.apply_bockstein(b)
                    d1 = alg.generators[alg.index[n1]].degree
                    rhs = rhs + (-bb if d1 % 2 else bb)
                    if lhs != rhs:
                        witness = "%s * %s" % (n1, n2)
                        break
                if witness:
                    break
            checks.append(Check("bockstein-leibniz", witness is None, witness))
        except BocksteinDataError as exc:
            checks.append(Check("bockstein-leibniz", False, str(exc)))

    # T* is an involution and an algebra map
    try:
        t = sq.switch()
        tt = t.after(t)
        witness = None
        for g in sq.algebra.generators:
            if tt.images[g.name] != sq.algebra.gen(g.name):
                witness = g.name
                break
        checks.append(Check("switch-involution", witness is None, witness))
    except Exception as exc:
        checks.append(Check("switch-involution", False, str(exc)))

    return HopfDiagnostics(checks)
