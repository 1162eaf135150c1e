"""Proper pushforward of classes from a projective bundle to its base.

A rank-``r`` bundle is recorded through its Chern roots, twisted so that one
root is zero (:func:`normalize_twist` arranges this); classes on the bundle's
projectivization are polynomials in the hyperplane class ``H`` with base
coefficients (:class:`ProjClass`).

Two mathematically independent evaluations of the pushforward are provided.
The series route applies the projection formula monomial by monomial:
``H**(r-1+k)`` pushes to the codimension-``k`` part of the inverse total
Chern class of the bundle.  The closed-form route assembles a single
polynomial from the coefficients, takes an exact Newton divided difference
over one formal variable per distinct nonzero root, applies a normalized
multi-derivative operator for repeated roots and substitutes the negated
roots.  The two agree identically, so comparing them is a strong correctness
check on either.
"""

from __future__ import annotations

import math

from .ring import (ChowError, ChowPoly, ContextError, Fraction, expand_ratio)


class BundleError(ChowError):
    """Malformed bundle description."""


def _root_entries(roots):
    entries = []
    for item in roots:
        if isinstance(item, ChowPoly):
            form, mult = item, 1
        else:
            form, mult = item
        if not isinstance(form, ChowPoly):
            raise BundleError("each Chern root must be a class (use ring.zero for 0)")
        if not isinstance(mult, int) or mult < 1:
            raise BundleError("root multiplicity must be a positive integer")
        entries.append((form, mult))
    if not entries:
        raise BundleError("at least one Chern root is required")
    ring = entries[0][0].ring
    if ring.formal:
        raise BundleError("bundle roots live in the base ring, not a formal extension")
    for form, _ in entries:
        if form.ring != ring:
            raise ContextError("Chern roots belong to different ring contexts")
        if not (form.is_zero() or form.is_homogeneous(1)):
            raise BundleError(f"Chern root {form} is not homogeneous of codimension 1")
    return entries, ring


class BundleSpec:
    """Chern roots of a vector bundle, normalized so one root is zero.

    Construction merges repeated forms into a single entry with summed
    multiplicity and orders roots canonically (zero first).  A root list
    without a zero entry is rejected; apply :func:`normalize_twist` first.
    """

    __slots__ = ("ring", "roots", "_inv_chern")

    def __init__(self, roots):
        entries, ring = _root_entries(roots)
        merged = []
        for form, mult in entries:
            for i, (f0, m0) in enumerate(merged):
                if f0 == form:
                    merged[i] = (f0, m0 + mult)
                    break
            else:
                merged.append((form, mult))
        zero = [e for e in merged if e[0].is_zero()]
        if not zero:
            raise BundleError("no zero Chern root; twist away the first root "
                              "with normalize_twist before building the bundle")
        nonzero = sorted((e for e in merged if not e[0].is_zero()),
                         key=lambda e: str(e[0]))
        self.ring = ring
        self.roots = tuple(zero + nonzero)
        self._inv_chern = None
        if self.rank < 2:
            raise BundleError("bundle rank must be at least 2")

    @property
    def rank(self):
        return sum(m for _, m in self.roots)

    @property
    def fiber_dim(self):
        """Dimension of the projectivized fiber: rank - 1."""
        return self.rank - 1

    @property
    def ambient_dim(self):
        """Dimension of the projectivization: base dim + fiber dim."""
        return self.ring.bound + self.fiber_dim

    @property
    def nonzero_roots(self):
        return self.roots[1:]

    def total_chern(self):
        out = self.ring.one
        for form, mult in self.roots:
            out = out * (self.ring.one + form) ** mult
        return out

    def __eq__(self, other):
        if not isinstance(other, BundleSpec):
            return NotImplemented
        return self.ring == other.ring and self.roots == other.roots

    def __repr__(self):
        body = ", ".join(f"({form})^{mult}" for form, mult in self.roots)
        return f"BundleSpec[{body}]"


class ProjClass:
    """A class on the projectivization: a polynomial in ``H`` whose
    coefficients live in the base ring.

    Coefficients are truncated so each term respects the dimension of the
    total space; the representative is unique under that truncation.
    """

    __slots__ = ("bundle", "coeffs")

    def __init__(self, bundle, coeffs):
        dmax = bundle.ambient_dim
        ring = bundle.ring
        cleaned = []
        for j, a in enumerate(coeffs):
            if j > dmax:
                break
            cleaned.append(ring.convert(a).truncate(dmax - j))
        while cleaned and cleaned[-1].is_zero():
            cleaned.pop()
        self.bundle = bundle
        self.coeffs = tuple(cleaned)

    @classmethod
    def constant(cls, bundle, value):
        return cls(bundle, [bundle.ring.const(value)])

    @classmethod
    def from_base(cls, bundle, value):
        return cls(bundle, [bundle.ring.convert(value)])

    @classmethod
    def hyperplane(cls, bundle):
        return cls(bundle, [bundle.ring.zero, bundle.ring.one])

    def coeff(self, j):
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.bundle.ring.zero

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self.coeff(0).constant_term()

    def is_homogeneous(self, degree=None):
        degs = set()
        for j, a in enumerate(self.coeffs):
            for mono in a._terms:
                degs.add(j + a.ring._total_degree(mono))
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return degree is None or degs == {degree}

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, ProjClass):
            if other.bundle != self.bundle:
                raise ContextError("classes live on different projectivizations")
            return other
        if isinstance(other, (int, Fraction, ChowPoly)):
            return ProjClass(self.bundle, [other])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return ProjClass(self.bundle,
                         [self.coeff(j) + other.coeff(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return ProjClass(self.bundle, [-a for a in self.coeffs])

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
        dmax = self.bundle.ambient_dim
        out = [self.bundle.ring.zero] * (dmax + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > dmax:
                    break
                out[i + j] = out[i + j] + a * b
        return ProjClass(self.bundle, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ProjClass.constant(self.bundle, 1)
        square = self
        e = exponent
        while e:
            if e & 1:
                result = result * square
            e >>= 1
            if e:
                square = square * square
        return result

    def inverse(self):
        """Truncated geometric inverse; requires constant term 1."""
        from .ring import NonUnitError
        if self.constant_term() != 1:
            raise NonUnitError("series inversion requires constant term 1")
        one = ProjClass.constant(self.bundle, 1)
        tail = one - self
        inverse = one
        power = one
        for _ in range(self.bundle.ambient_dim):
            power = power * tail
            if power.is_zero():
                break
            inverse = inverse + power
        return inverse

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / _nonzero_rational(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if len(other.coeffs) <= 1 and other.coeff(0).is_constant():
            return self * (1 / _nonzero_rational(other.constant_term()))
        return self * other.inverse()

    def __rtruediv__(self, other):
        num = self._coerce(other)
        if num is None:
            return NotImplemented
        return num.__truediv__(self)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ChowPoly)):
            other = ProjClass(self.bundle, [other])
        if not isinstance(other, ProjClass):
            return NotImplemented
        return self.bundle == other.bundle and self.coeffs == other.coeffs

    def shift_h(self, delta):
        """The same class written in ``H + delta`` powers: H -> H + delta."""
        return _eval_h_poly(self.coeffs, self.bundle, delta)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            h = "" if j == 0 else ("H" if j == 1 else f"H^{j}")
            parts.append(f"({a}){'*' + h if h else ''}")
        return " + ".join(parts) or "0"

    def __repr__(self):
        return f"ProjClass({self})"


def _nonzero_rational(value):
    from .ring import _rational
    q = _rational(value)
    if not q:
        raise ZeroDivisionError("division of a class by zero")
    return q


def _eval_h_poly(coeffs, bundle, delta):
    base = ProjClass.from_base(bundle, delta)
    x = ProjClass.hyperplane(bundle) + base
    out = ProjClass.constant(bundle, 0)
    power = ProjClass.constant(bundle, 1)
    for a in coeffs:
        out = out + power * a
        power = power * x
    return out


def normalize_twist(roots, cls=None):
    """Twist so the first listed root becomes zero.

    Every root ``M_i`` is replaced by ``M_i - M_0`` and, when a class is
    given, ``H`` is rewritten as ``H - M_0`` in it; pushforwards are
    invariant under this change of presentation.  Returns the normalized
    ``BundleSpec`` together with the transformed class (or ``None``).
    """
    entries, _ = _root_entries(roots)
    m0 = entries[0][0]
    bundle = BundleSpec([(form - m0, mult) for form, mult in entries])
    if cls is None:
        return bundle, None
    coeffs = cls.coeffs if isinstance(cls, ProjClass) else tuple(cls)
    return bundle, _eval_h_poly(coeffs, bundle, -m0)


# -- series route -------------------------------------------------------


def inverse_total_chern(bundle):
    """Inverse of the bundle's total Chern class, truncated at the base dim."""
    if bundle._inv_chern is None:
        bundle._inv_chern = expand_ratio(bundle.ring.one, bundle.total_chern())
    return bundle._inv_chern


def pushforward_power(bundle, exponent):
    """Pushforward of a bare power of the hyperplane class.

    ``H**(fiber_dim + k)`` maps to the codimension-``k`` component of the
    inverse total Chern class; powers below the fiber dimension (and
    components beyond the base dimension) vanish.
    """
    if not isinstance(exponent, int) or exponent < 0:
        raise ValueError("exponent must be a nonnegative integer")
    k = exponent - bundle.fiber_dim
    if k < 0 or k > bundle.ring.bound:
        return bundle.ring.zero
    return inverse_total_chern(bundle).component(k)


def pushforward_series(cls):
    """Pushforward by the projection formula, coefficient by coefficient."""
    bundle = cls.bundle
    out = bundle.ring.zero
    for j, a in enumerate(cls.coeffs):
        if not a.is_zero():
            out = out + a * pushforward_power(bundle, j)
    return out


# -- divided-difference route --------------------------------------------


def divided_difference(coeffs, points, ring=None):
    """Newton divided difference of ``sum(coeffs[k] * t**k)`` at ``points``.

    ``points`` are formal variables of ``ring``; the coefficients must not
    involve them.  The order of the difference is ``len(points) - 1``; every
    division performed by the recursion is exact (verified), and the result
    is symmetric in the points.
    """
    points = list(points)
    if not points:
        raise ValueError("at least one point is required")
    if ring is None:
        ring = coeffs[0].ring
    for name in points:
        if not ring.is_formal(name):
            raise ChowError(f"point {name!r} is not a formal variable")
    lifted = [ring.convert(c) for c in coeffs]
    banned = set(points)
    for c in lifted:
        if c.symbols_used() & banned:
            raise ChowError("coefficients must not involve the point variables")
    row = []
    for name in points:
        x = ring.sym(name)
        acc = ring.zero
        power = ring.one
        for c in lifted:
            acc = acc + c * power
            power = power * x
        row.append(acc)
    for step in range(1, len(points)):
        row = [_exact_linear_quotient(row[i] - row[i + 1],
                                      points[i], points[i + step], ring)
               for i in range(len(row) - 1)]
    return row[0]


def _exact_linear_quotient(value, a, b, ring):
    # value / (a - b), both formal; exactness is an invariant of the
    # divided-difference recursion and is verified by re-multiplying
    xa, xb = ring.sym(a), ring.sym(b)
    quotient = ring.zero
    for e, part in _split_power(value, a, ring).items():
        for i in range(e):  # (xa^e - xb^e)/(xa - xb)
            quotient = quotient + part * xa ** i * xb ** (e - 1 - i)
    if quotient * (xa - xb) != value:
        raise ChowError("internal error: inexact division in divided difference")
    return quotient


def _split_power(value, name, ring):
    groups = {}
    for mono, c in value._terms.items():
        exps = dict(mono)
        e = exps.pop(name, 0)
        rest = ring._mono(exps)
        bucket = groups.setdefault(e, {})
        bucket[rest] = bucket.get(rest, Fraction(0)) + c
    return {e: ring._make(terms) for e, terms in groups.items()}


def _formal_names(ring, count):
    names = []
    for i in range(1, count + 1):
        name = f"x{i}"
        while name in ring._degrees or name in names:
            name = "_" + name
        names.append(name)
    return names


def pushforward_closed_form(cls, minimal_truncation=False):
    """Pushforward via exact divided differences.

    The coefficients of ``cls`` from index ``rank - 1`` upward are packed
    into one polynomial ``G`` (shifted down by ``rank - m`` where ``m``
    counts distinct nonzero roots), its ``(m-1)``-st divided difference is
    taken at one formal point per distinct root, repeated roots are handled
    by the normalized operator ``g -> (1/k!) d^k/dx^k (x^k g)``, and each
    point is finally replaced by the negated root.

    With ``minimal_truncation=True`` the packing starts already at index
    ``rank - m``; the extra low coefficients are annihilated by the divided
    difference, so the answer is unchanged.  Either way the result equals
    :func:`pushforward_series`.
    """
    bundle = cls.bundle
    ring = bundle.ring
    n = bundle.fiber_dim
    roots = bundle.nonzero_roots
    m = len(roots)
    if m == 0:
        return cls.coeff(n)
    shift = bundle.rank - m
    low = shift if minimal_truncation else n
    if len(cls.coeffs) <= low:
        return ring.zero
    points = _formal_names(ring, m)
    aux = ring.with_formal(points)
    gcoeffs = [aux.zero] * (len(cls.coeffs) - shift)
    for p in range(low, len(cls.coeffs)):
        gcoeffs[p - shift] = aux.convert(cls.coeff(p))
    g = divided_difference(gcoeffs, points, aux)
    for name, (_, mult) in zip(points, roots):
        k = mult - 1
        if k:
            g = g * aux.sym(name) ** k
            for _ in range(k):
                g = g.derivative(name)
            g = g / math.factorial(k)
    for name, (form, _) in zip(points, roots):
        g = g.substitute(name, aux.convert(-form))
    return ring.convert(g)
