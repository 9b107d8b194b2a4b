"""
Exact arithmetic in cyclotomic fields Q(ζₑ).

Values are dense algebraic-number polynomials over QQ reduced modulo the e-th cyclotomic
polynomial, so the power basis 1, ζ, …, ζ^(φ(e)−1) gives every element a unique form.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational
from typing import Dict, Mapping, Sequence, Tuple, Union

from sympy import Symbol, cyclotomic_poly
from sympy.functions.combinatorial.numbers import mobius, totient
from sympy.polys.densearith import dup_rem
from sympy.polys.domains import QQ
from sympy.polys.polyclasses import ANP

from cmkit.core.errors import NonIntegralResult

_x = Symbol('x')


@lru_cache(maxsize=None)
def _modulus(conductor: int) -> Tuple:
    return tuple(QQ(int(c)) for c in cyclotomic_poly(conductor, _x, polys=True).all_coeffs())


def _qq(q) -> object:
    if isinstance(q, Fraction):
        return QQ(q.numerator, q.denominator)
    if isinstance(q, int):
        return QQ(q)
    return QQ.convert(q)


def _fraction(q) -> Fraction:
    return Fraction(int(q.numerator), int(q.denominator))


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


Scalar = Union[int, Fraction]


class Cyclotomic:

    """
    An element of Q(ζₑ), e being the conductor.

    Arithmetic with ints, Fractions and elements of other cyclotomic fields is exact; mixing
    conductors lifts both operands into the field of the least common multiple.
    """

    __slots__ = ('conductor', '_anp')

    def __init__(self, conductor: int, anp: ANP):
        self.conductor = conductor
        self._anp = anp

    @classmethod
    def from_exponents(cls, conductor: int, coeffs: Mapping[int, Scalar]) -> 'Cyclotomic':
        """
        The element Σ cₖ ζₑᵏ; exponents are read modulo the conductor.
        """
        mod = list(_modulus(conductor))
        reduced: Dict[int, Scalar] = {}
        for k, c in coeffs.items():
            if c:
                k %= conductor
                reduced[k] = reduced.get(k, 0) + c
        if not reduced:
            return cls(conductor, ANP([], mod, QQ))

        top = max(reduced)
        dense = [QQ(0)] * (top + 1)
        for k, c in reduced.items():
            dense[top - k] = _qq(c)
        return cls(conductor, ANP(dup_rem(dense, mod, QQ), mod, QQ))

    @classmethod
    def from_spectrum(cls, conductor: int, spectrum: Sequence[int]) -> 'Cyclotomic':
        """
        The trace Σ μₖ ζₑᵏ of a matrix whose eigenvalue ζₑᵏ occurs μₖ times.
        """
        return cls.from_exponents(conductor, dict(enumerate(spectrum)))

    @classmethod
    def rational(cls, conductor: int, q: Scalar) -> 'Cyclotomic':
        return cls.from_exponents(conductor, {0: q})

    @classmethod
    def zeta(cls, conductor: int, k: int = 1) -> 'Cyclotomic':
        return cls.from_exponents(conductor, {k: 1})

    # Coercion.

    def _coerce(self, other) -> Tuple['Cyclotomic', 'Cyclotomic']:
        if isinstance(other, Cyclotomic):
            if other.conductor == self.conductor:
                return self, other
            common = _lcm(self.conductor, other.conductor)
            return self.lift(common), other.lift(common)
        if isinstance(other, Rational):
            return self, Cyclotomic.rational(self.conductor, Fraction(other))
        raise TypeError(f'cannot combine a cyclotomic number with {type(other).__name__}')

    def lift(self, conductor: int) -> 'Cyclotomic':
        """
        The same number seen in Q(ζ_f), for f a multiple of the conductor.
        """
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f'Q(ζ{self.conductor}) does not embed in Q(ζ{conductor})')
        step = conductor // self.conductor
        return Cyclotomic.from_exponents(conductor, {k * step: c for k, c in enumerate(self.coefficients)})

    # Inspection.

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        """
        Coordinates in the power basis, lowest power first, padded to φ(e) entries.
        """
        high_first = self._anp.to_list()
        width = len(_modulus(self.conductor)) - 1
        low_first = [_fraction(c) for c in reversed(high_first)]
        return tuple(low_first + [Fraction(0)] * (width - len(low_first)))

    @property
    def is_rational(self) -> bool:
        return len(self._anp.to_list()) <= 1

    @property
    def is_integer(self) -> bool:
        return self.is_rational and self.to_fraction().denominator == 1

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise NonIntegralResult(f'{self} is not rational')
        rep = self._anp.to_list()
        return _fraction(rep[0]) if rep else Fraction(0)

    def to_int(self) -> int:
        q = self.to_fraction()
        if q.denominator != 1:
            raise NonIntegralResult(f'{q} is not an integer')
        return q.numerator

    def normalized_trace(self) -> Fraction:
        """
        Tr(x)/φ(e), the mean of the Galois conjugates; it does not depend on the conductor.
        """
        e = self.conductor
        total = Fraction(0)
        for k, c in enumerate(self.coefficients):
            if c:
                d = e // gcd(k, e)
                total += c * Fraction(int(mobius(d)), int(totient(d)))
        return total

    def sort_key(self) -> Tuple[Fraction, ...]:
        return self.coefficients

    # Arithmetic.

    def __add__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(a.conductor, a._anp + b._anp)

    __radd__ = __add__

    def __sub__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(a.conductor, a._anp - b._anp)

    def __rsub__(self, other):
        a, b = self._coerce(other)
        return Cyclotomic(a.conductor, b._anp - a._anp)

    def __neg__(self):
        return Cyclotomic(self.conductor, -self._anp)

    def __mul__(self, other):
        if isinstance(other, Rational):
            return Cyclotomic(self.conductor, self._anp.mul_ground(_qq(Fraction(other))))
        a, b = self._coerce(other)
        return Cyclotomic(a.conductor, a._anp * b._anp)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError('division of a cyclotomic number by zero')
            return Cyclotomic(self.conductor, self._anp.mul_ground(_qq(1 / other)))
        a, b = self._coerce(other)
        if not b:
            raise ZeroDivisionError('division of a cyclotomic number by zero')
        return Cyclotomic(a.conductor, a._anp.exquo(b._anp))

    def __pow__(self, n: int):
        return Cyclotomic(self.conductor, self._anp.pow(n))

    def conjugate(self) -> 'Cyclotomic':
        """
        Complex conjugation, ζ ↦ ζ⁻¹.
        """
        e = self.conductor
        return Cyclotomic.from_exponents(e, {(e - k) % e: c for k, c in enumerate(self.coefficients) if c})

    def galois(self, k: int) -> 'Cyclotomic':
        """
        The Galois automorphism ζ ↦ ζᵏ, k prime to the conductor.
        """
        e = self.conductor
        if gcd(k, e) != 1:
            raise ValueError(f'{k} is not a unit modulo {e}')
        return Cyclotomic.from_exponents(e, {(k * i) % e: c for i, c in enumerate(self.coefficients) if c})

    # Comparison.

    def __eq__(self, other):
        try:
            a, b = self._coerce(other)
        except TypeError:
            return NotImplemented
        return a._anp == b._anp

    def __hash__(self):
        if self.is_rational:
            return hash(self.to_fraction())
        return hash(('cyclotomic', self.normalized_trace()))

    def __bool__(self):
        return bool(self._anp.to_list())

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            terms.append(str(c) if k == 0 else f'{c}*z^{k}')
        return '+'.join(terms).replace('+-', '-') if terms else '0'

    def __repr__(self):
        return f'Cyclotomic({self.conductor}, {self})'
