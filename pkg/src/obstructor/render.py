"""Plain-text rendering of elements, used by traces, diagnostics and the CLI."""

from __future__ import annotations

from fractions import Fraction


def _signed_coefficient(ring, c):
    """Return (sign, magnitude-string) with modular coefficients centered.

    Mod m, representatives above m/2 render as negatives (e.g. 4 mod 5 is -1),
    matching the usual way torsion classes are written.
    """
    if ring.modulus is not None:
        m = ring.modulus
        if c > m // 2 and m > 2:
            return -1, str(m - c)
        return 1, str(c)
    f = Fraction(c)
    if f < 0:
        return -1, str(-f)
    return 1, str(f)


def _render_factor(base, exps) -> str:
    parts = []
    for g, e in zip(base.generators, exps):
        if e == 0:
            continue
        parts.append(g.name if e == 1 else "%s^%d" % (g.name, e))
    return "*".join(parts) if parts else "1"


def render_monomial(presentation, exps) -> str:
    factors = presentation.tensor_factors
    if factors is None:
        return _render_factor(presentation, exps)
    base, k = factors
    width = len(base.generators)
    blocks = [exps[i * width : (i + 1) * width] for i in range(k)]
    return "⊗".join(_render_factor(base, b) for b in blocks)


def render_element(e) -> str:
    if e.is_zero():
        return "0"
    ring = e.presentation.ring
    pieces = []
    for exps, coeff in e.sorted_terms():
        sign, mag = _signed_coefficient(ring, coeff)
        mono = render_monomial(e.presentation, exps)
        if not any(exps):
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = "%s*%s" % (mag, mono)
        pieces.append((sign, body))
    out = []
    for i, (sign, body) in enumerate(pieces):
        if i == 0:
            out.append("-" + body if sign < 0 else body)
        else:
            out.append(" - " + body if sign < 0 else " + " + body)
    return "".join(out)
