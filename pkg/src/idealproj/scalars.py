"""Exact scalar arithmetic: rationals and univariate polynomials in h.

The base field is Q, represented by :class:`fractions.Fraction` (already
canonical: reduced, positive denominator, zero is 0/1).  ``HPoly`` adds the
ring Q[h] of polynomials in the perturbation parameter h, stored densely by
power with leading zeros trimmed.  There is no floating point anywhere in
this module; floats are rejected at every boundary.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ExactnessError, ValidationError

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce ``value`` (int, Fraction, or a string like ``"-3/4"``) to Fraction.

    Floats and decimal strings are rejected: all input must be exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValidationError(f"not a rational value: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        raise ValidationError(f"float literal {value!r} rejected: use a rational string like '1/10'")
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text or "E" in text:
            raise ValidationError(f"non-integer literal {value!r} rejected: use 'p/q' form")
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"cannot parse rational {value!r}: {exc}") from None
    raise ValidationError(f"not a rational value: {value!r}")


def rat_str(value: Fraction) -> str:
    """Serialize a Fraction as ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _coerce_coeff(value) -> Fraction:
    if isinstance(value, HPoly):
        raise ValidationError("HPoly coefficients cannot nest inside HPoly")
    return rat(value)


class HPoly:
    """A polynomial in h over Q, stored as a dense coefficient tuple.

    Canonical form: no trailing (leading-power) zero coefficient is stored;
    the zero polynomial is the empty tuple.  Values are immutable and
    hashable.  Arithmetic mixes freely with ints and Fractions, which are
    treated as constant polynomials.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce_coeff(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("HPoly is immutable")

    @classmethod
    def constant(cls, value) -> "HPoly":
        return cls((rat(value),))

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def constant_term(self) -> Fraction:
        """The coefficient of h^0, i.e. the exact value of the h -> 0 limit."""
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def coeff(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        other = _as_hpoly(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(("HPoly", self._coeffs))

    def __add__(self, other) -> "HPoly":
        other = _as_hpoly(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return HPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "HPoly":
        return HPoly(tuple(-c for c in self._coeffs))

    def __sub__(self, other) -> "HPoly":
        other = _as_hpoly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "HPoly":
        other = _as_hpoly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "HPoly":
        other = _as_hpoly(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return HPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, u in enumerate(a):
            if u == 0:
                continue
            for j, v in enumerate(b):
                out[i + j] += u * v
        return HPoly(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "HPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValidationError(f"HPoly power must be a nonnegative integer, got {exponent!r}")
        result = HPoly((1,))
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, value) -> Fraction:
        """Evaluate at a concrete rational h by Horner's scheme."""
        h0 = rat(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * h0 + c
        return acc

    def div_hpow(self, k: int) -> "HPoly":
        """Divide exactly by h**k.

        Requires the k lowest coefficients to vanish; a nonzero low
        coefficient raises :class:`ExactnessError`, which downstream code
        treats as a violated divisibility identity (a bug detector).
        """
        if not isinstance(k, int) or k < 0:
            raise ValidationError(f"power must be a nonnegative integer, got {k!r}")
        if not self._coeffs:
            return self
        for p in range(min(k, len(self._coeffs))):
            if self._coeffs[p] != 0:
                raise ExactnessError(
                    f"not divisible by h^{k}: coefficient of h^{p} is {rat_str(self._coeffs[p])}"
                )
        if len(self._coeffs) <= k:
            return HPoly()
        return HPoly(self._coeffs[k:])

    def div_exact(self, divisor: "HPoly") -> "HPoly":
        """Exact polynomial division; raises ExactnessError on a remainder."""
        divisor = _as_hpoly(divisor)
        if divisor is None or not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._coeffs:
            return HPoly()
        rem = list(self._coeffs)
        dn = len(divisor._coeffs)
        lead = divisor._coeffs[-1]
        if len(rem) < dn:
            raise ExactnessError("inexact polynomial division: degree of dividend too small")
        quot = [Fraction(0)] * (len(rem) - dn + 1)
        for i in range(len(quot) - 1, -1, -1):
            q = rem[i + dn - 1] / lead
            quot[i] = q
            if q != 0:
                for j, c in enumerate(divisor._coeffs):
                    rem[i + j] -= q * c
        if any(c != 0 for c in rem):
            raise ExactnessError("inexact polynomial division: nonzero remainder")
        return HPoly(quot)

    def to_strings(self) -> list:
        """Serialize as the coefficient array [c0, c1, ...] of rational strings."""
        return [rat_str(c) for c in self._coeffs]

    @classmethod
    def from_strings(cls, items) -> "HPoly":
        return cls(rat(s) for s in items)

    def pretty(self) -> str:
        """Render like ``"1 + h - 5*h^2"`` with zero terms skipped."""
        if not self._coeffs:
            return "0"
        parts = []
        for power, c in enumerate(self._coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if power == 0:
                body = rat_str(mag)
            else:
                var = "h" if power == 1 else f"h^{power}"
                body = var if mag == 1 else f"{rat_str(mag)}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = first_body if first_sign == "+" else f"-{first_body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"HPoly({self.pretty()})"


def _as_hpoly(value):
    if isinstance(value, HPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return HPoly((Fraction(value),))
    return None


#: The monomial h, for building symbolic-h expressions.
H = HPoly((0, 1))
