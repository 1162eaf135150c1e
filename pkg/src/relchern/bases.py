"""Base-variety models.

A :class:`FormalBase` keeps the Chern classes of the base as free symbols
``c1..cm`` alongside named divisor symbols, so one computation answers the
question for every smooth base of that dimension at once.  A
:class:`ProjectiveSpaceBase` works in the hyperplane class ``h`` and can
integrate, turning top classes into integers.  :func:`specialize` maps
formal answers into projective space and commutes with the whole pipeline.
"""

from __future__ import annotations

import math
import re

from .ring import ChowError, ChowRing, Symbol, SymbolError


class SpecializationError(ChowError):
    """A symbol survived that the target base cannot interpret."""


class ModeError(ChowError):
    """Requested output mode is unavailable for this base model."""


_CHERN_RE = re.compile(r"c(\d+)\Z")


class FormalBase:
    """Smooth base of dimension ``dim`` with free Chern symbols.

    ``divisors`` adds degree-1 symbols (``("L",)`` by default).  With
    ``fano=True`` the first divisor is declared to be the anticanonical
    class and :meth:`apply_binding` rewrites it to ``c1`` for display.
    """

    def __init__(self, dim, divisors=("L",), fano=False):
        if not isinstance(dim, int) or dim < 0:
            raise ValueError("base dimension must be a nonnegative integer")
        symbols = [Symbol(f"c{i}", i) for i in range(1, dim + 1)]
        symbols += [Symbol(name, 1) for name in divisors]
        self.dim = dim
        self.divisors = tuple(divisors)
        self.fano = bool(fano)
        self.ring = ChowRing(symbols, dim)

    def chern_symbol(self, i):
        if not 1 <= i <= self.dim:
            raise SymbolError(f"c{i} does not exist on a dimension-{self.dim} base")
        return self.ring.sym(f"c{i}")

    def chern_polynomial(self):
        out = self.ring.one
        for i in range(1, self.dim + 1):
            out = out + self.chern_symbol(i)
        return out

    def divisor(self, name=None):
        return self.ring.sym(name if name is not None else self.divisors[0])

    def apply_binding(self, cls):
        """Rewrite the anticanonical divisor as ``c1`` when ``fano`` is set."""
        if not self.fano:
            return cls
        if self.dim < 1:
            raise SpecializationError("a zero-dimensional base has no c1")
        return cls.rewrite({self.divisors[0]: self.chern_symbol(1)})

    def __eq__(self, other):
        if not isinstance(other, FormalBase):
            return NotImplemented
        return (self.dim == other.dim and self.divisors == other.divisors
                and self.fano == other.fano)

    def __repr__(self):
        return f"FormalBase(dim={self.dim}, divisors={self.divisors}, fano={self.fano})"


class ProjectiveSpaceBase:
    """Projective space of dimension ``dim``; classes are polynomials in the
    hyperplane class ``h``.

    ``multiple`` optionally binds a divisor name (``"L"`` by default) to
    ``multiple * h`` so bundle data written in terms of that divisor can be
    interpreted here.
    """

    def __init__(self, dim, multiple=None, divisor="L"):
        if not isinstance(dim, int) or dim < 0:
            raise ValueError("base dimension must be a nonnegative integer")
        if multiple is not None and not isinstance(multiple, int):
            raise ValueError("divisor multiple must be an integer")
        self.dim = dim
        self.multiple = multiple
        self.divisor = divisor
        self.ring = ChowRing([Symbol("h", 1)], dim)

    def hyperplane(self):
        return self.ring.sym("h")

    def chern_polynomial(self):
        return (self.ring.one + self.hyperplane()) ** (self.dim + 1)

    def chern_component(self, i):
        return math.comb(self.dim + 1, i) * self.hyperplane() ** i

    def divisor_class(self):
        if self.multiple is None:
            raise SpecializationError(
                f"divisor {self.divisor!r} has no bound multiple of h")
        return self.multiple * self.hyperplane()

    def integrate(self, cls):
        """Degree of a class: the coefficient of ``h**dim``."""
        try:
            cls = self.ring.convert(cls)
        except SymbolError as exc:
            raise SpecializationError(str(exc)) from None
        exponents = {"h": self.dim} if self.dim else {}
        return cls.coefficient(exponents)

    def __eq__(self, other):
        if not isinstance(other, ProjectiveSpaceBase):
            return NotImplemented
        return (self.dim == other.dim and self.multiple == other.multiple
                and self.divisor == other.divisor)

    def __repr__(self):
        return (f"ProjectiveSpaceBase(dim={self.dim}, "
                f"{self.divisor}={self.multiple}*h)")


def specialize(cls, base):
    """Map a formal-base class into projective space.

    Chern symbols ``c_i`` become the Chern components of projective space,
    the bound divisor becomes its multiple of ``h``, and the result is
    truncated at the target dimension.  Any other surviving symbol raises
    :class:`SpecializationError`.
    """
    if not isinstance(base, ProjectiveSpaceBase):
        raise TypeError("specialize targets a ProjectiveSpaceBase")
    mapping = {}
    for name in cls.symbols_used():
        match = _CHERN_RE.match(name)
        if match:
            mapping[name] = base.chern_component(int(match.group(1)))
        elif name == base.divisor:
            mapping[name] = base.divisor_class()
        elif name == "h":
            mapping[name] = base.hyperplane()
        else:
            raise SpecializationError(f"cannot specialize symbol {name!r}")
    return cls.rewrite(mapping, base.ring)
