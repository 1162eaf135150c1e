"""Output renderings: plain text, LaTeX and a JSON term structure."""

from __future__ import annotations

import re


def to_text(cls):
    """Canonical text; round-trips through the expression parser."""
    return str(cls)


_SUBSCRIPT_RE = re.compile(r"([A-Za-z]+)_?(\d+)\Z")


def _latex_symbol(name):
    match = _SUBSCRIPT_RE.match(name)
    if match:
        return f"{match.group(1)}_{{{match.group(2)}}}"
    return name


def _latex_coeff(q):
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q.numerator < 0 else ""
    return f"{sign}\\tfrac{{{abs(q.numerator)}}}{{{q.denominator}}}"


def to_latex(cls):
    items = cls.terms()
    if not items:
        return "0"
    parts = []
    for mono, c in items:
        mono_s = " ".join(
            _latex_symbol(n) if e == 1 else f"{_latex_symbol(n)}^{{{e}}}"
            for n, e in mono)
        if not mono_s:
            parts.append(_latex_coeff(c))
        elif c == 1:
            parts.append(mono_s)
        elif c == -1:
            parts.append("-" + mono_s)
        else:
            parts.append(f"{_latex_coeff(c)} {mono_s}")
    text = parts[0]
    for p in parts[1:]:
        text += " - " + p[1:] if p.startswith("-") else " + " + p
    return text


def rational_json(q):
    return {"numerator": str(q.numerator), "denominator": str(q.denominator)}


def class_to_json(cls):
    """Codimension-graded term list.

    Every nonzero graded piece becomes ``{"codim": k, "terms": [...]}`` with
    terms as ``{"monomial": {name: exp}, "coeff": {...}}`` in canonical
    order; numerators and denominators are decimal strings so arbitrary
    precision survives any JSON reader.
    """
    out = []
    for k in range(cls.ring.bound + 1):
        piece = cls.component(k)
        if piece.is_zero():
            continue
        terms = [{"monomial": {n: e for n, e in mono}, "coeff": rational_json(c)}
                 for mono, c in piece.terms()]
        out.append({"codim": k, "terms": terms})
    return out
