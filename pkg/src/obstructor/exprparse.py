"""Tiny parser for element expressions used in the catalog file and tests.

Grammar (whitespace ignored between tokens):

    expr    := ['-'] term (('+' | '-') term)*
    term    := [integer ['*']] blocks
    blocks  := factors ('@' factors)*     # '@' separates tensor factors
    factors := '1' | factor (['*'] factor)*
    factor  := name ['^' integer]

The number of '@'-separated blocks must match the tensor power of the target
presentation (one block for a plain algebra).
"""

from __future__ import annotations

import re

from .errors import PresentationError

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|([@^*+\-]))")


def _tokenize(s: str):
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise PresentationError(
                    "bad character %r at position %d in %r" % (s[pos], pos, s)
                )
            break
        if m.group(1) is not None:
            out.append(("int", int(m.group(1))))
        elif m.group(2) is not None:
            out.append(("name", m.group(2)))
        else:
            out.append(("op", m.group(3)))
        pos = m.end()
    return out


def parse_element(presentation, text: str):
    """Parse `text` into an Element over `presentation`."""
    toks = _tokenize(text)
    factors = presentation.tensor_factors
    if factors is None:
        base, power = presentation, 1
    else:
        base, power = factors
    width = len(base.generators)

    result = presentation.zero()
    i = 0
    first = True
    while i < len(toks) or first:
        sign = 1
        saw_sign = False
        while i < len(toks) and toks[i] == ("op", "+"):
            saw_sign = True
            i += 1
        while i < len(toks) and toks[i] == ("op", "-"):
            sign = -sign
            saw_sign = True
            i += 1
        if i >= len(toks):
            if not toks:
                raise PresentationError("empty element expression")
            if saw_sign:
                raise PresentationError("dangling operator in %r" % text)
            break
        first = False

        coeff = 1
        if toks[i][0] == "int":
            coeff = toks[i][1]
            i += 1
            if i < len(toks) and toks[i] == ("op", "*"):
                i += 1
            if i >= len(toks) or toks[i][0] != "name":
                # bare integer term (a multiple of the unit)
                result = result + presentation.one(sign * coeff)
                continue

        exps = [0] * len(presentation.generators)
        block = 0
        saw_factor = False
        while i < len(toks):
            kind, val = toks[i]
            if kind == "name":
                i += 1
                exp = 1
                if i + 1 < len(toks) and toks[i] == ("op", "^") and toks[i + 1][0] == "int":
                    exp = toks[i + 1][1]
                    i += 2
                if val not in base.index:
                    raise PresentationError(
                        "unknown generator %r in %r" % (val, text)
                    )
                exps[block * width + base.index[val]] += exp
                saw_factor = True
                if i < len(toks) and toks[i] == ("op", "*"):
                    i += 1
            elif kind == "int" and val == 1:
                # the unit written as '1' inside a tensor block
                i += 1
                saw_factor = True
            elif (kind, val) == ("op", "@"):
                block += 1
                if block >= power:
                    raise PresentationError(
                        "too many tensor factors in %r (presentation has %d)"
                        % (text, power)
                    )
                i += 1
            else:
                break
        if not saw_factor:
            raise PresentationError("dangling operator in %r" % text)
        if power > 1 and block != power - 1:
            raise PresentationError(
                "expected %d tensor factors in term of %r" % (power, text)
            )
        if not presentation.monomial_is_canonical(tuple(exps)):
            # exponent past a kind bound: the monomial is zero in the algebra
            continue
        result = result + presentation.monomial(tuple(exps), sign * coeff)
    return result
