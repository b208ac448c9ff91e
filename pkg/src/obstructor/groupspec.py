"""Parsing and validation of compact-simple-group descriptors.

Accepted syntax (family names case-insensitive, 'Z' subgroup with optional
parentheses): "SU(6)/Z3", "PSU(5)", "PSp(4)", "SO(11)", "PSO(10)", "Ss(8)",
"Spin(9)", "Sp(3)", "PE6", "PE7", "E6", "E7", "E8", "F4", "G2".
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from .errors import GroupSpecError

# Families with a parenthesized rank argument.
_PARAM_FAMILIES = ("spin", "psu", "su", "psp", "sp", "pso", "so", "ss")
# Fixed names without arguments.
_FIXED_FAMILIES = ("pe6", "pe7", "e6", "e7", "e8", "f4", "g2")

SIMPLY_CONNECTED = {"Spin", "Sp", "E6", "E7", "E8", "F4", "G2"}


@dataclass(frozen=True)
class GroupSpec:
    """Validated descriptor of a compact simple group G = G~/Γ.

    family is one of SU, PSp, SO, PSO, Ss, PE6, PE7, Spin, Sp, E6, E7, E8,
    F4, G2.  For SU, `l` is the order of the central cyclic subgroup (l = 1
    means the simply connected SU(n) itself).  For PSO the group is PSO(2n)
    and for Ss it is Ss(4n); `n` stores the half/quarter parameter.
    """

    family: str
    n: Optional[int] = None
    l: Optional[int] = None

    @property
    def simply_connected(self) -> bool:
        return self.family in SIMPLY_CONNECTED or (self.family == "SU" and self.l == 1)

    def fundamental_group_exponent(self) -> int:
        """Exponent of Γ = π₁(G)."""
        if self.simply_connected:
            return 1
        if self.family == "SU":
            return self.l  # Γ = Z_l
        if self.family in ("PSp", "SO", "Ss", "PE7"):
            return 2
        if self.family == "PSO":
            return 4 if self.n % 2 == 1 else 2  # Z_4, else Z_2 × Z_2
        if self.family == "PE6":
            return 3
        raise GroupSpecError("unknown family %r" % self.family)

    def render(self) -> str:
        f = self.family
        if f == "SU":
            if self.l == self.n:
                return "PSU(%d)" % self.n
            if self.l == 1:
                return "SU(%d)" % self.n
            return "SU(%d)/Z%d" % (self.n, self.l)
        if f == "PSO":
            return "PSO(%d)" % (2 * self.n)
        if f == "Ss":
            return "Ss(%d)" % (4 * self.n)
        if f in ("PSp", "SO", "Spin", "Sp"):
            return "%s(%d)" % (f, self.n)
        return f

    def __str__(self):
        return self.render()


def _validate(spec: GroupSpec, pos: int) -> GroupSpec:
    f, n, l = spec.family, spec.n, spec.l
    if f == "SU":
        if n < 2:
            raise GroupSpecError("SU(n) requires n >= 2, got n=%d" % n, pos)
        if l < 1 or n % l != 0:
            raise GroupSpecError(
                "%d does not divide %d: the central subgroup Z_l needs l | n" % (l, n),
                pos,
            )
    elif f == "PSp":
        if n < 1:
            raise GroupSpecError("PSp(n) requires n >= 1", pos)
    elif f == "Sp":
        if n < 1:
            raise GroupSpecError("Sp(n) requires n >= 1", pos)
    elif f == "SO":
        if n < 6:
            raise GroupSpecError(
                "SO(n) supported for n >= 6; use PSp(1) for SO(3) and SU(4)/Z2 for SO(6)"
                if n == 3
                else "SO(n) supported for n >= 6",
                pos,
            )
    elif f == "Spin":
        if n < 3:
            raise GroupSpecError("Spin(n) requires n >= 3", pos)
    elif f == "PSO":
        if n < 4:
            raise GroupSpecError(
                "PSO(m) supported for even m >= 8 (PSO(2n), n >= 4)", pos
            )
    elif f == "Ss":
        if n < 2:
            raise GroupSpecError(
                "Ss(m) supported for m >= 8 divisible by 4 (Ss(4n), n >= 2)", pos
            )
    return spec


def parse_group_spec(s: str) -> GroupSpec:
    """Total parse: returns a validated GroupSpec or raises GroupSpecError
    with the offending input position."""
    if not isinstance(s, str):
        raise GroupSpecError("group spec must be a string", 0)
    text = s.strip()
    offset = len(s) - len(s.lstrip())
    low = text.lower()

    for name in _FIXED_FAMILIES:
        if low == name:
            return GroupSpec({"pe6": "PE6", "pe7": "PE7", "e6": "E6", "e7": "E7",
                              "e8": "E8", "f4": "F4", "g2": "G2"}[name])

    family = None
    for cand in _PARAM_FAMILIES:
        if low.startswith(cand):
            family = cand
            break
    if family is None:
        raise GroupSpecError("unknown group family in %r" % s, offset)
    rest = text[len(family):]
    pos = offset + len(family)

    m = re.match(r"\(\s*(\d+)\s*\)", rest)
    if not m:
        raise GroupSpecError("expected '(n)' after family name", pos)
    arg = int(m.group(1))
    pos_after_arg = pos + m.end()
    rest = rest[m.end():]

    l: Optional[int] = None
    if rest:
        qm = re.match(r"\s*/\s*[Zz]\s*(?:\(\s*(\d+)\s*\)|(\d+))\s*$", rest)
        if not qm:
            raise GroupSpecError(
                "trailing input %r (expected nothing or '/Z<l>')" % rest, pos_after_arg
            )
        if family not in ("su",):
            raise GroupSpecError(
                "central quotients are only spelled explicitly for SU; "
                "use PSp/PSO/Ss/PE names for the other families",
                pos_after_arg,
            )
        l = int(qm.group(1) or qm.group(2))

    if family == "su":
        return _validate(GroupSpec("SU", arg, l if l is not None else 1), pos)
    if family == "psu":
        return _validate(GroupSpec("SU", arg, arg), pos)
    if family == "psp":
        return _validate(GroupSpec("PSp", arg), pos)
    if family == "sp":
        return _validate(GroupSpec("Sp", arg), pos)
    if family == "so":
        return _validate(GroupSpec("SO", arg), pos)
    if family == "spin":
        return _validate(GroupSpec("Spin", arg), pos)
    if family == "pso":
        if arg % 2 != 0:
            raise GroupSpecError("PSO takes an even argument, got %d" % arg, pos)
        return _validate(GroupSpec("PSO", arg // 2), pos)
    if family == "ss":
        if arg % 4 != 0:
            raise GroupSpecError(
                "Ss takes an argument divisible by 4, got %d" % arg, pos
            )
        return _validate(GroupSpec("Ss", arg // 4), pos)
    raise GroupSpecError("unknown group family in %r" % s, offset)


def render_group_spec(spec: GroupSpec) -> str:
    return spec.render()
