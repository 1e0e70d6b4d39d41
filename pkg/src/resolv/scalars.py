"""Exact arithmetic in the 8th cyclotomic field.

Every scalar in this package is an element a0 + a1*z + a2*z^2 + a3*z^3 where z
is a primitive 8th root of unity (z^4 = -1). This one field contains both the
imaginary unit i = z^2 and sqrt(2) = z - z^3, which is exactly what is needed
to write down Pauli/gamma generator images with their 1/sqrt(2) normalization
without ever leaving exact arithmetic.
"""

import re
from fractions import Fraction
from math import gcd

from .errors import SchemaError

_RATIONAL_RE = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?\Z")


def _coeff_to_pair(x):
    if isinstance(x, int):
        return x, 1
    if isinstance(x, Fraction):
        return x.numerator, x.denominator
    raise TypeError(f"cannot build a scalar coefficient from {type(x).__name__}")


class CycScalar:
    """Element of Q(z), z^4 = -1, in canonical form.

    Stored as four integer numerators over a single positive common
    denominator with gcd(n0, n1, n2, n3, den) = 1, so equal values always
    have identical representations and zero testing is a tuple comparison.
    """

    __slots__ = ("n0", "n1", "n2", "n3", "den")

    def __init__(self, a0=0, a1=0, a2=0, a3=0):
        p0, q0 = _coeff_to_pair(a0)
        p1, q1 = _coeff_to_pair(a1)
        p2, q2 = _coeff_to_pair(a2)
        p3, q3 = _coeff_to_pair(a3)
        den = q0 * q1 * q2 * q3
        self._set(
            p0 * (den // q0),
            p1 * (den // q1),
            p2 * (den // q2),
            p3 * (den // q3),
            den,
        )

    def _set(self, n0, n1, n2, n3, den):
        g = gcd(n0, n1, n2, n3, den)
        if g > 1:
            n0 //= g
            n1 //= g
            n2 //= g
            n3 //= g
            den //= g
        self.n0 = n0
        self.n1 = n1
        self.n2 = n2
        self.n3 = n3
        self.den = den

    @classmethod
    def _raw(cls, n0, n1, n2, n3, den):
        s = object.__new__(cls)
        s._set(n0, n1, n2, n3, den)
        return s

    @classmethod
    def from_fraction(cls, q):
        q = Fraction(q)
        return cls._raw(q.numerator, 0, 0, 0, q.denominator)

    @property
    def coeffs(self):
        """The four rational coordinates (a0, a1, a2, a3) in the z-power basis."""
        d = self.den
        return (
            Fraction(self.n0, d),
            Fraction(self.n1, d),
            Fraction(self.n2, d),
            Fraction(self.n3, d),
        )

    def is_zero(self):
        return self.n0 == 0 and self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def is_rational(self):
        return self.n1 == 0 and self.n2 == 0 and self.n3 == 0

    def rational(self):
        """This value as a Fraction; raises if it is not rational."""
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.n0, self.den)

    def __bool__(self):
        return not self.is_zero()

    @staticmethod
    def _coerce(x):
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, int):
            return CycScalar._raw(x, 0, 0, 0, 1)
        if isinstance(x, Fraction):
            return CycScalar._raw(x.numerator, 0, 0, 0, x.denominator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        da, db = self.den, o.den
        return CycScalar._raw(
            self.n0 * db + o.n0 * da,
            self.n1 * db + o.n1 * da,
            self.n2 * db + o.n2 * da,
            self.n3 * db + o.n3 * da,
            da * db,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycScalar._raw(-self.n0, -self.n1, -self.n2, -self.n3, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.__add__(-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__add__(-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a0, a1, a2, a3 = self.n0, self.n1, self.n2, self.n3
        b0, b1, b2, b3 = o.n0, o.n1, o.n2, o.n3
        # convolution reduced by z^4 = -1
        return CycScalar._raw(
            a0 * b0 - a1 * b3 - a2 * b2 - a3 * b1,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a1 * b1 + a2 * b0 - a3 * b3,
            a0 * b3 + a1 * b2 + a2 * b1 + a3 * b0,
            self.den * o.den,
        )

    __rmul__ = __mul__

    def inverse(self):
        """Exact multiplicative inverse via the Galois norm down to Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero scalar")
        # The three nontrivial Galois images z -> z^3, z^5, z^7 of self.
        s3 = CycScalar._raw(self.n0, self.n3, -self.n2, self.n1, self.den)
        s5 = CycScalar._raw(self.n0, -self.n1, self.n2, -self.n3, self.den)
        s7 = CycScalar._raw(self.n0, -self.n3, -self.n2, -self.n1, self.den)
        y = s3 * s5 * s7
        norm = self * y
        assert norm.is_rational(), "field norm must land in Q"
        q = Fraction(norm.den, norm.n0)
        return CycScalar._raw(
            y.n0 * q.numerator,
            y.n1 * q.numerator,
            y.n2 * q.numerator,
            y.n3 * q.numerator,
            y.den * q.denominator,
        )

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        acc = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def conjugate(self):
        """Complex conjugation z -> z^-1 = -z^3."""
        return CycScalar._raw(self.n0, -self.n3, -self.n2, -self.n1, self.den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (
            self.n0 == o.n0
            and self.n1 == o.n1
            and self.n2 == o.n2
            and self.n3 == o.n3
            and self.den == o.den
        )

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.n0, self.den))
        return hash((self.n0, self.n1, self.n2, self.n3, self.den))

    def __str__(self):
        # Display in the 1, i, sqrt2, i*sqrt2 basis, which is how these
        # values are usually thought of.
        a0, a1, a2, a3 = self.coeffs
        real = a0
        imag = a2
        rt = (a1 - a3) / 2
        irt = (a1 + a3) / 2
        parts = []
        for coeff, sym in ((real, ""), (imag, "i"), (rt, "√2"), (irt, "i√2")):
            if coeff == 0:
                continue
            if not sym:
                parts.append(str(coeff))
            elif coeff == 1:
                parts.append(sym)
            elif coeff == -1:
                parts.append(f"-{sym}")
            else:
                parts.append(f"{coeff}·{sym}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out

    def __repr__(self):
        return f"CycScalar[{self}]"


ZERO = CycScalar()
ONE = CycScalar(1)
ZETA = CycScalar(0, 1, 0, 0)
I = CycScalar(0, 0, 1, 0)
SQRT2 = CycScalar(0, 1, 0, -1)
HALF = CycScalar(Fraction(1, 2))
INV_SQRT2 = SQRT2 * HALF  # 1/sqrt2 = sqrt2/2


def rational_from_json(text, path):
    """Parse a canonical rational string ("p/q" or integer, reduced, q > 0)."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise SchemaError(path, f"not a rational string: {text!r}")
    value = Fraction(text)
    if str(value) != text:
        raise SchemaError(path, f"rational not in canonical form: {text!r}")
    return value


def scalar_to_json(s):
    return [str(c) for c in s.coeffs]


def scalar_from_json(doc, path):
    if not isinstance(doc, list) or len(doc) != 4:
        raise SchemaError(path, "scalar must be a list of 4 rational strings")
    coeffs = [rational_from_json(doc[k], f"{path}[{k}]") for k in range(4)]
    return CycScalar(*coeffs)
