"""Hypersurface fibrations in projective bundles and their Chern numbers.

A fibration is cut out inside the projectivization of a bundle by a divisor
of class ``d*H + beta``.  Pushing the total Chern class of the fibration
down to the base factors it as a multiplier class ``Q`` (a function of the
bundle roots, ``d`` and ``beta`` alone) times the Chern class of the base;
the top graded piece of that product integrates to the Euler characteristic
of the total space, the Sethi-Vafa-Witten formula.

For the built-in family whose fibers are Fermat-type degree-``d``
hypersurfaces in a ``O + L^n`` bundle, the same class is recomputed along a
completely different route: the singular fibers are stratified by the
discriminant, fiberwise Euler characteristics weight the
Chern-Schwartz-MacPherson classes of the strata, and the weighted sum must
reproduce the pushforward answer.  That agreement is the package's
strongest end-to-end check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .bases import FormalBase, ModeError, ProjectiveSpaceBase
from .pushforward import (BundleSpec, ProjClass, _root_entries, normalize_twist,
                          pushforward_closed_form, pushforward_series)
from .ring import ChowError, ChowPoly, ContextError


class UnsupportedDegreeError(ChowError):
    """The stratified route needs fiber degree at least 2."""


class HypersurfaceSpec:
    """A hypersurface of class ``degree*H + beta`` in a projectivization."""

    __slots__ = ("degree", "beta", "bundle")

    def __init__(self, degree, beta, bundle):
        if not isinstance(degree, int) or degree < 0:
            raise ValueError("hypersurface degree must be a nonnegative integer")
        if not isinstance(bundle, BundleSpec):
            raise TypeError("bundle must be a BundleSpec")
        beta = bundle.ring.convert(beta)
        if not (beta.is_zero() or beta.is_homogeneous(1)):
            raise ValueError("beta must be zero or homogeneous of codimension 1")
        self.degree = degree
        self.beta = beta
        self.bundle = bundle

    @classmethod
    def from_roots(cls, degree, beta, roots):
        """Build from an untwisted root list; ``beta`` is adjusted by the
        twist that makes the first root vanish."""
        entries, ring = _root_entries(roots)
        m0 = entries[0][0]
        bundle, _ = normalize_twist(roots)
        return cls(degree, ring.convert(beta) - degree * m0, bundle)

    def divisor_class(self):
        H = ProjClass.hyperplane(self.bundle)
        return H * self.degree + ProjClass.from_base(self.bundle, self.beta)

    def __eq__(self, other):
        if not isinstance(other, HypersurfaceSpec):
            return NotImplemented
        return (self.degree == other.degree and self.beta == other.beta
                and self.bundle == other.bundle)

    def __repr__(self):
        return f"HypersurfaceSpec({self.degree}*H + {self.beta} in {self.bundle!r})"


def alpha_class(hyp):
    """The class on the projectivization whose pushforward is ``Q``.

    Writing ``y`` for the hypersurface class, this is
    ``(1 + H)^k0 * prod (1 + H + L_i)^ki * y / (1 + y)``: the total Chern
    class of the ambient relative tangent bundle times the adjunction
    factor of the hypersurface.
    """
    bundle = hyp.bundle
    one = ProjClass.constant(bundle, 1)
    H = ProjClass.hyperplane(bundle)
    out = one
    for form, mult in bundle.roots:
        out = out * (one + H + ProjClass.from_base(bundle, form)) ** mult
    y = hyp.divisor_class()
    if y.is_zero():
        return y
    return out * y * (one + y).inverse()


def q_class(hyp):
    """The multiplier class ``Q``: pushforward of :func:`alpha_class`."""
    return pushforward_series(alpha_class(hyp))


def q_class_display(hyp):
    """``Q`` again, through the divided-difference evaluation that keeps
    only the minimally necessary truncation; must equal :func:`q_class`."""
    return pushforward_closed_form(alpha_class(hyp), minimal_truncation=True)


def relative_chern_class(hyp, base):
    """Pushed-down total Chern class of the fibration: ``Q * c(base)``."""
    if hyp.bundle.ring != base.ring:
        raise ContextError("hypersurface and base use different ring contexts")
    return q_class(hyp) * base.chern_polynomial()


def euler_characteristic(hyp, base, as_integer=None):
    """Top graded piece of the pushed-down Chern class.

    Over projective space the piece is integrated to an ``int`` (pass
    ``as_integer=False`` for the class instead).  Over a formal base the
    symbolic class is returned; requesting ``as_integer=True`` there is a
    :class:`ModeError`, since free Chern symbols cannot be integrated.
    """
    top = relative_chern_class(hyp, base).component(base.dim)
    if isinstance(base, ProjectiveSpaceBase):
        if as_integer is False:
            return top
        value = base.integrate(top)
        if value.denominator != 1:
            raise ChowError(f"non-integral Euler characteristic {value}")
        return int(value)
    if as_integer:
        raise ModeError("integration needs a projective-space base; "
                        "a formal base only yields the symbolic class")
    return top


def svw_components(hyp, base):
    """Graded pieces of the pushed-down Chern class, codimension 1 up to the
    base dimension; integrating the top one gives the Euler characteristic.

    The identically-zero class (a degree-0 hypersurface with zero ``beta``)
    yields an empty list.
    """
    full = relative_chern_class(hyp, base)
    if full.is_zero():
        return []
    return [full.component(j) for j in range(1, base.dim + 1)]


def smooth_hypersurface_euler(n, d):
    """Euler characteristic of a smooth degree-``d`` hypersurface in
    projective ``n``-space, as an exact integer."""
    if not isinstance(n, int) or n < 0:
        raise ValueError("ambient projective dimension must be a nonnegative integer")
    if not isinstance(d, int) or d < 0:
        raise ValueError("hypersurface degree must be a nonnegative integer")
    return -sum(math.comb(n + 1, k) * (-d) ** (n - k) for k in range(n))


@dataclass(frozen=True)
class StratumData:
    """Fiberwise Euler characteristics and base classes feeding the
    stratified Chern-class computation.

    ``chi0``/``chi1``/``chi2`` are the Euler characteristics of the fibers
    over the three strata: off the discriminant, on the discriminant away
    from the deeper locus, and on the locus where both coefficient sections
    vanish.  The singular fibers each carry one isolated singular point,
    so the jumps are signed Milnor numbers.
    """

    chi0: int
    chi1: int
    chi2: int
    class_f: ChowPoly
    class_g: ChowPoly
    class_discriminant: ChowPoly
    csm_discriminant: ChowPoly
    chern_common_zero: ChowPoly


@dataclass(frozen=True)
class FermatFamily:
    """Degree-``d`` fibrations with Fermat-type fibers.

    The fiber equation is a degree-``d`` power sum in the ``L``-twisted
    coordinates perturbed by two coefficient sections of ``L^(d-1)`` and
    ``L^d``; the ambient bundle is ``O + L^n`` and the hypersurface class is
    ``d*H + d*L``.  Degrees below 2 do not pin down the stratification, so
    they are rejected here (the plain pushforward route still handles them
    through :class:`HypersurfaceSpec` directly).
    """

    n: int
    degree: int
    base_dim: int = 3
    divisor: str = "L"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("fiber dimension n must be a positive integer")
        if not isinstance(self.degree, int) or self.degree < 2:
            raise UnsupportedDegreeError("the family needs degree at least 2")
        if not isinstance(self.base_dim, int) or self.base_dim < 0:
            raise ValueError("base dimension must be a nonnegative integer")

    def formal_base(self):
        return FormalBase(self.base_dim, divisors=(self.divisor,))

    def _resolve(self, base):
        if base is None:
            base = self.formal_base()
        if base.dim != self.base_dim:
            raise ContextError("base dimension disagrees with the family")
        L = base.ring.sym(self.divisor)
        return base, L

    def hypersurface(self, base=None):
        base, L = self._resolve(base)
        bundle = BundleSpec([(base.ring.zero, 1), (L, self.n)])
        return HypersurfaceSpec(self.degree, self.degree * L, bundle)

    def q_closed_form(self, base=None):
        """``Q`` from the family's closed formula: writing ``e_k`` for the
        smooth-hypersurface Euler characteristics,
        ``(e_n + (e_{n-1} + 1) d L) / (1 + d L)``."""
        base, L = self._resolve(base)
        d = self.degree
        e_n = smooth_hypersurface_euler(self.n, d)
        e_prev = smooth_hypersurface_euler(self.n - 1, d)
        return (e_n + (e_prev + 1) * d * L) / (base.ring.one + d * L)

    def strata(self, base=None):
        base, L = self._resolve(base)
        n, d = self.n, self.degree
        one = base.ring.one
        cX = base.chern_polynomial()
        chi0 = smooth_hypersurface_euler(n, d)
        chi1 = chi0 + (-1) ** n * (d - 1) ** (n - 1)
        chi2 = chi0 + (-1) ** n * (d - 1) ** n
        f = (d - 1) * L
        g = d * L
        delta = d * (d - 1) * L
        chern_common_zero = cX * f * g / ((one + f) * (one + g))
        csm_discriminant = cX * (
            delta / (one + delta)
            + ((d - 2) * (d - 1)) * f * g
            / ((one + delta) * (one + delta + (1 - d) * f) * (one + delta + (2 - d) * g)))
        return StratumData(chi0, chi1, chi2, f, g, delta,
                           csm_discriminant, chern_common_zero)

    def chern_by_strata(self, base=None):
        """Pushed-down Chern class assembled from the stratification: fibers
        of constant Euler characteristic weight the CSM classes of their
        strata.  Must equal ``relative_chern_class`` of the induced
        hypersurface."""
        base, _ = self._resolve(base)
        s = self.strata(base)
        return (s.chi0 * base.chern_polynomial()
                + (s.chi1 - s.chi0) * s.csm_discriminant
                + (s.chi2 - s.chi1) * s.chern_common_zero)
