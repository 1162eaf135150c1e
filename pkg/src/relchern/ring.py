"""Exact arithmetic for truncated graded polynomials in named class symbols.

Intersection classes on a smooth variety of dimension ``m`` are represented
as sparse polynomials in a fixed set of graded symbols: divisor classes have
degree 1, a Chern-class symbol ``c_i`` has degree ``i``.  Every term whose
total symbol degree exceeds the ring's truncation bound is dropped at
construction time, which realizes working modulo classes of codimension
greater than ``m``.

Coefficients are arbitrary-precision rationals (:class:`fractions.Fraction`);
floats are rejected so every identity holds exactly.  A ring may carry extra
*formal* variables, degree-1 symbols exempt from truncation, which host
intermediate divided-difference computations and never appear in results.

Values are immutable and operations are pure.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class ChowError(Exception):
    """Base class for errors raised by this package."""


class ContextError(ChowError):
    """Operands live in different ring contexts."""


class NonUnitError(ChowError):
    """Series inversion of a class whose constant term is not 1."""


class SymbolError(ChowError):
    """Unknown symbol, or an operation reserved for formal variables."""


class GradeError(ChowError):
    """Graded-component index outside ``[0, bound]``."""


_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _rational(value):
    # floats are banned: exactness is the whole point
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {value!r}")


@dataclass(frozen=True)
class Symbol:
    """A named generator with a codimension weight."""

    name: str
    degree: int = 1

    def __post_init__(self):
        if not isinstance(self.name, str) or not _NAME_RE.match(self.name):
            raise SymbolError(f"invalid symbol name {self.name!r}")
        if not isinstance(self.degree, int) or self.degree < 1:
            raise SymbolError("symbol degree must be a positive integer")


class ChowRing:
    """A symbol table, a truncation bound and optional formal variables.

    The bound is the dimension of the underlying variety.  Two rings are
    interchangeable contexts exactly when their symbol tables, bounds and
    formal variables agree.
    """

    __slots__ = ("bound", "symbols", "formal", "_degrees", "_formal_set")

    def __init__(self, symbols, bound, formal=()):
        if not isinstance(bound, int) or bound < 0:
            raise GradeError("truncation bound must be a nonnegative integer")
        syms = [s if isinstance(s, Symbol) else Symbol(*s) for s in symbols]
        syms.sort(key=lambda s: (s.degree, s.name))
        formal = tuple(sorted(formal))
        names = [s.name for s in syms]
        if len(set(names) | set(formal)) != len(names) + len(formal):
            raise SymbolError("symbol names must be unique within a ring")
        degrees = {s.name: s.degree for s in syms}
        for name in formal:
            Symbol(name)  # validates the identifier
            degrees[name] = 1
        self.bound = bound
        self.symbols = tuple(syms)
        self.formal = formal
        self._degrees = degrees
        self._formal_set = frozenset(formal)

    def __eq__(self, other):
        if not isinstance(other, ChowRing):
            return NotImplemented
        return (self.bound == other.bound and self.symbols == other.symbols
                and self.formal == other.formal)

    def __hash__(self):
        return hash((self.bound, self.symbols, self.formal))

    def __repr__(self):
        names = ",".join(s.name for s in self.symbols)
        if self.formal:
            names += ";" + ",".join(self.formal)
        return f"ChowRing({names}; bound={self.bound})"

    # -- symbol table -------------------------------------------------

    def degree_of(self, name):
        try:
            return self._degrees[name]
        except KeyError:
            raise SymbolError(f"unknown symbol {name!r}") from None

    def is_formal(self, name):
        return name in self._formal_set

    @property
    def zero(self):
        return ChowPoly(self, {})

    @property
    def one(self):
        return self.const(1)

    def const(self, value):
        q = _rational(value)
        return ChowPoly(self, {(): q} if q else {})

    def sym(self, name):
        self.degree_of(name)
        return self._make({((name, 1),): Fraction(1)})

    def linear(self, coeffs):
        """Linear combination of symbols from a ``{name: rational}`` map."""
        out = self.zero
        for name, c in coeffs.items():
            out = out + self.sym(name) * _rational(c)
        return out

    # -- derived contexts ----------------------------------------------

    def with_formal(self, names):
        return ChowRing(self.symbols, self.bound, self.formal + tuple(names))

    def base_ring(self):
        return ChowRing(self.symbols, self.bound) if self.formal else self

    def with_bound(self, bound):
        return ChowRing(self.symbols, bound, self.formal)

    def convert(self, value):
        """Reinterpret a value in this ring, truncating to this bound.

        Every symbol used by the value must exist here with the same degree;
        mismatched degrees raise :class:`ContextError`.
        """
        if isinstance(value, (int, Fraction)):
            return self.const(value)
        if not isinstance(value, ChowPoly):
            raise TypeError(f"cannot convert {value!r} to a class")
        if value.ring is self or value.ring == self:
            return value if value.ring is self else self._make(dict(value._terms))
        for name in value.symbols_used():
            if name not in self._degrees:
                raise SymbolError(f"symbol {name!r} does not exist in the target ring")
            if self._degrees[name] != value.ring._degrees[name]:
                raise ContextError(f"symbol {name!r} changes degree between rings")
        return self._make(dict(value._terms))

    # -- internals -----------------------------------------------------

    def _mono(self, exponents):
        items = [(n, e) for n, e in exponents.items() if e]
        items.sort(key=lambda ne: (self._degrees[ne[0]], ne[0]))
        return tuple(items)

    def _base_degree(self, mono):
        return sum(e * self._degrees[n] for n, e in mono if n not in self._formal_set)

    def _total_degree(self, mono):
        return sum(e * self._degrees[n] for n, e in mono)

    def _make(self, terms):
        out = {}
        for mono, coeff in terms.items():
            if not coeff:
                continue
            if self._base_degree(mono) > self.bound:
                continue
            out[mono] = coeff
        return ChowPoly(self, out)


class ChowPoly:
    """Immutable truncated graded polynomial with exact rational coefficients.

    Build values through :class:`ChowRing` (``ring.sym``, ``ring.const``,
    ``ring.linear``) and combine them with ``+ - * / **``.  Division accepts
    a nonzero rational constant (exact scalar division) or a class with
    constant term 1 (truncated geometric series); anything else raises
    :class:`NonUnitError`.
    """

    __slots__ = ("ring", "_terms")

    def __init__(self, ring, terms):
        # internal: callers construct through ring._make / ring ops
        self.ring = ring
        self._terms = terms

    # -- inspection -----------------------------------------------------

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self):
        return all(m == () for m in self._terms)

    def constant_term(self):
        return self._terms.get((), Fraction(0))

    def symbols_used(self):
        names = set()
        for mono in self._terms:
            for n, _ in mono:
                names.add(n)
        return names

    def uses_formal(self):
        return any(self.ring.is_formal(n) for n in self.symbols_used())

    def is_homogeneous(self, degree=None):
        degs = {self.ring._total_degree(m) for m in self._terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    def total_degree(self):
        """Largest total symbol degree present (0 for the zero class)."""
        if not self._terms:
            return 0
        return max(self.ring._total_degree(m) for m in self._terms)

    def coefficient(self, exponents):
        """Exact coefficient of the monomial given as ``{name: exp}``."""
        return self._terms.get(self.ring._mono(dict(exponents)), Fraction(0))

    def terms(self):
        """Terms as ``(monomial, coefficient)`` pairs in canonical order."""
        ring = self.ring

        def key(item):
            mono, _ = item
            expanded = tuple((ring._degrees[n], n) for n, e in mono for _ in range(e))
            return (ring._total_degree(mono), expanded)

        return sorted(self._terms.items(), key=key)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        if isinstance(other, ChowPoly):
            if other.ring is self.ring or other.ring == self.ring:
                return other
            raise ContextError("operands belong to different ring contexts")
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for mono, c in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + c
        return self.ring._make(terms)

    __radd__ = __add__

    def __neg__(self):
        return ChowPoly(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ring = self.ring
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                if ring._base_degree(m1) + ring._base_degree(m2) > ring.bound:
                    continue
                if not m1:
                    mono = m2
                elif not m2:
                    mono = m1
                else:
                    exps = dict(m1)
                    for n, e in m2:
                        exps[n] = exps.get(n, 0) + e
                    mono = ring._mono(exps)
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return ring._make(out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one
        square = self
        e = exponent
        while e:
            if e & 1:
                result = result * square
            e >>= 1
            if e:
                square = square * square
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _rational(other)
            if not q:
                raise ZeroDivisionError("division of a class by zero")
            return self * (1 / q)
        if isinstance(other, ChowPoly):
            if other.is_constant():
                return self.__truediv__(other.constant_term())
            return expand_ratio(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        num = self._coerce(other)
        if num is None:
            return NotImplemented
        return num.__truediv__(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, ChowPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    # -- graded structure ---------------------------------------------

    def component(self, codim):
        """The homogeneous piece of the given codimension.

        The index must lie in ``[0, bound]``; anything else is a
        :class:`GradeError` rather than silently zero.
        """
        if not isinstance(codim, int) or codim < 0 or codim > self.ring.bound:
            raise GradeError(f"component index {codim} outside [0, {self.ring.bound}]")
        ring = self.ring
        return ChowPoly(ring, {m: c for m, c in self._terms.items()
                               if ring._total_degree(m) == codim})

    def truncate(self, degree):
        """Drop all terms of total degree above ``degree``."""
        ring = self.ring
        return ChowPoly(ring, {m: c for m, c in self._terms.items()
                               if ring._total_degree(m) <= degree})

    # -- formal-variable calculus ---------------------------------------

    def derivative(self, name):
        """Partial derivative with respect to a formal variable."""
        if not self.ring.is_formal(name):
            raise SymbolError(f"{name!r} is not a formal variable of this ring")
        out = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            e = exps.get(name, 0)
            if not e:
                continue
            exps[name] = e - 1
            out[self.ring._mono(exps)] = c * e
        return self.ring._make(out)

    def substitute(self, name, value):
        """Replace a formal variable by a class of the same ring."""
        if not self.ring.is_formal(name):
            raise SymbolError(f"{name!r} is not a formal variable of this ring")
        value = self.ring.convert(value)
        groups = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            e = exps.pop(name, 0)
            rest = self.ring._mono(exps)
            groups.setdefault(e, {})[rest] = groups.get(e, {}).get(rest, Fraction(0)) + c
        out = self.ring.zero
        for e, terms in groups.items():
            part = self.ring._make(terms)
            out = out + part * value ** e
        return out

    def rewrite(self, mapping, ring=None):
        """Substitute every symbol via ``mapping`` (defaulting to itself),
        landing in ``ring`` (defaulting to this one)."""
        target = ring if ring is not None else self.ring
        out = target.zero
        for mono, c in self._terms.items():
            term = target.const(c)
            for name, e in mono:
                value = mapping.get(name)
                if value is None:
                    value = target.sym(name)
                else:
                    value = target.convert(value)
                term = term * value ** e
            out = out + term
        return out

    # -- rendering -------------------------------------------------------

    def __str__(self):
        items = self.terms()
        if not items:
            return "0"
        parts = []
        for mono, c in items:
            mono_s = "*".join(n if e == 1 else f"{n}^{e}" for n, e in mono)
            if not mono_s:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono_s)
            elif c == -1:
                parts.append("-" + mono_s)
            else:
                parts.append(f"{c}*{mono_s}")
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self):
        return f"ChowPoly({self})"


def expand_ratio(numerator, denominator):
    """``numerator / denominator`` as a truncated geometric series.

    The denominator must have constant term 1 (a unit for the truncated
    ring); the expansion terminates because its positive-degree part is
    nilpotent.  Formal variables are not allowed in the denominator, as no
    power of them ever truncates away.
    """
    if isinstance(numerator, (int, Fraction)):
        numerator = denominator.ring.const(numerator)
    if isinstance(denominator, (int, Fraction)):
        denominator = numerator.ring.const(denominator)
    if numerator.ring != denominator.ring:
        raise ContextError("operands belong to different ring contexts")
    if denominator.constant_term() != 1:
        raise NonUnitError("series inversion requires constant term 1")
    ring = numerator.ring
    tail = ring.one - denominator  # -(positive-degree part)
    if tail.uses_formal():
        raise SymbolError("series inversion is not available over formal variables")
    inverse = ring.one
    power = ring.one
    for _ in range(ring.bound):
        power = power * tail
        if power.is_zero():
            break
        inverse = inverse + power
    return numerator * inverse
