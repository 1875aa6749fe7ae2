"""Text forms of ring elements, moduli and vectors.

Gaussian elements are written ``a+bi`` (``2+1i``, ``-i``, ``3``).  Quaternions are
sums of terms over ``1, e1, e2, e3`` (``i, j, k`` are accepted as synonyms) plus
``w = (1+e1+e2+e3)/2``; half-integer values can also be given in doubled form
``half[d0,d1,d2,d3]``.  Ring moduli carry a family prefix: ``G:``, ``L:`` or ``H:``.
"""

from __future__ import annotations

import re

from .algebra import Element, Family, GaussianInt, Quat, RingDescriptor


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", column: int = 0, line: int | None = None):
        self.message = message
        self.text = text
        self.column = column
        self.line = line
        where = f"line {line}, column {column}" if line is not None else f"column {column}"
        super().__init__(f"{where}: {message}" + (f" in {text!r}" if text else ""))


_TERM = re.compile(r"([+-]?)(?:half\[([^\]]*)\]|(\d*)(e1|e2|e3|i|j|k|w)?)")
_QUAT_UNITS = {
    "e1": (0, 2, 0, 0),
    "i": (0, 2, 0, 0),
    "e2": (0, 0, 2, 0),
    "j": (0, 0, 2, 0),
    "e3": (0, 0, 0, 2),
    "k": (0, 0, 0, 2),
    "w": (1, 1, 1, 1),
    "": (2, 0, 0, 0),
}


def _terms(text: str):
    pos = 0
    if not text:
        raise ParseError("empty element", text, 1)
    while pos < len(text):
        m = _TERM.match(text, pos)
        sign, half, digits, unit = m.groups()
        if m.end() == pos or (half is None and not digits and unit is None):
            bad = pos + len(sign)
            what = repr(text[bad]) if bad < len(text) else "end of input"
            raise ParseError(f"unexpected {what}", text, bad + 1)
        if pos > 0 and not sign:
            raise ParseError("terms must be joined by '+' or '-'", text, pos + 1)
        yield pos, (-1 if sign == "-" else 1), half, digits, unit
        pos = m.end()


def parse_element(text: str, family: Family) -> Element:
    """Parse one element in the grammar of ``family``."""
    text = text.strip()
    if family is Family.GAUSSIAN:
        a = b = 0
        for col, sign, half, digits, unit in _terms(text):
            if half is not None or unit not in (None, "i"):
                raise ParseError("only integers and 'i' are allowed in Gaussian elements", text, col + 1)
            coef = sign * (int(digits) if digits else 1)
            if unit == "i":
                b += coef
            else:
                a += coef
        return GaussianInt(a, b)

    acc = [0, 0, 0, 0]
    for col, sign, half, digits, unit in _terms(text):
        if half is not None:
            try:
                parts = [int(v) for v in half.split(",")]
            except ValueError:
                raise ParseError("half[...] needs four integers", text, col + 1) from None
            if len(parts) != 4:
                raise ParseError("half[...] needs four integers", text, col + 1)
            vec = parts
            coef = sign
        else:
            vec = _QUAT_UNITS[unit or ""]
            coef = sign * (int(digits) if digits else 1)
        for idx in range(4):
            acc[idx] += coef * vec[idx]
    try:
        return Quat(*acc)
    except ValueError as exc:
        raise ParseError(str(exc), text, 1) from None


def parse_ring(text: str) -> RingDescriptor:
    """Parse ``G:2+1i``, ``L:2+1e1``, ``H:1+1e1+1e2`` and the like."""
    text = text.strip()
    prefix, sep, rest = text.partition(":")
    if not sep:
        raise ParseError("ring needs a family prefix G:, L: or H:", text, 1)
    try:
        family = Family(prefix.upper())
    except ValueError:
        raise ParseError(f"unknown ring family {prefix!r}", text, 1) from None
    modulus = parse_element(rest, Family.GAUSSIAN if family is Family.GAUSSIAN else Family.LIPSCHITZ)
    try:
        return RingDescriptor(family, modulus)
    except ValueError as exc:
        raise ParseError(str(exc), text, len(prefix) + 2) from None


def parse_vector(text: str, ring: RingDescriptor) -> tuple[Element, ...]:
    """Parse ``"v1;v2;..."`` (surrounding parentheses optional)."""
    body = text.strip()
    if body.startswith("(") and body.endswith(")"):
        body = body[1:-1]
    parts = body.split(";") if ";" in body else body.split(",")
    out = []
    for part in parts:
        x = parse_element(part, ring.family)
        ring.require(x)
        out.append(x)
    return tuple(out)


def _fmt_terms(coefs, names, explicit_ones: bool) -> str:
    out = ""
    for c, name in zip(coefs, names):
        if c == 0:
            continue
        mag = abs(c)
        if name:
            body = f"{mag}{name}" if (mag != 1 or explicit_ones) else name
        else:
            body = str(mag)
        if not out:
            out = ("-" if c < 0 else "") + body
        else:
            out += ("-" if c < 0 else "+") + body
    return out or "0"


def format_element(x: Element, explicit_ones: bool = False) -> str:
    """Inverse of :func:`parse_element`; half-integers print in doubled form."""
    if isinstance(x, GaussianInt):
        return _fmt_terms((x.a, x.b), ("", "i"), explicit_ones)
    if not x.is_lipschitz:
        return "half[{},{},{},{}]".format(*x.doubled)
    return _fmt_terms(x.coords, ("", "e1", "e2", "e3"), explicit_ones)


def format_vector(v, sep: str = ",") -> str:
    return "(" + sep.join(format_element(x) for x in v) + ")"
