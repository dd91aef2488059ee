"""Sparse multivariate polynomials over an exact coefficient ring.

An ``MPoly`` maps exponent tuples (one nonnegative integer per variable) to
nonzero coefficients.  Coefficients are Fractions in normal use; the same
class also works verbatim with :class:`~idealproj.scalars.HPoly`
coefficients, which is the only other ring this package instantiates.

Variables are named x1..xd and indexed 1-based in the public API.  The
canonical term order used for iteration, printing and serialization is
graded lexicographic, ascending: terms sorted by total degree, ties broken
by the exponent tuple, so for d=3 the order starts 1, x3, x2, x1, x3^2,
x3*x2, ...
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ValidationError
from .scalars import HPoly, rat, rat_str


# ---------------------------------------------------------------------------
# exponent-tuple helpers


def total_degree(expts) -> int:
    return sum(expts)


def multi_factorial(expts) -> int:
    """The product of the factorials of the entries."""
    out = 1
    for e in expts:
        out *= math.factorial(e)
    return out


def multi_binomial(alpha, beta) -> int:
    """Product of the componentwise binomial coefficients C(alpha_i, beta_i)."""
    out = 1
    for a, b in zip(alpha, beta):
        out *= math.comb(a, b)
    return out


def expts_leq(beta, alpha) -> bool:
    """Componentwise product order on exponent tuples."""
    return all(b <= a for b, a in zip(beta, alpha))


def graded_lex_key(expts):
    return (sum(expts), expts)


def _check_expts(dim, expts):
    expts = tuple(expts)
    if len(expts) != dim:
        raise ValidationError(f"exponent tuple {expts} has arity {len(expts)}, expected {dim}")
    for e in expts:
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValidationError(f"exponents must be nonnegative integers, got {expts}")
    return expts


def _coerce(value):
    if isinstance(value, HPoly):
        return value
    return rat(value)


class MPoly:
    """Immutable sparse polynomial in ``dim`` variables."""

    __slots__ = ("_dim", "_terms")

    def __init__(self, dim: int, terms=None):
        if not isinstance(dim, int) or dim < 1:
            raise ValidationError(f"dimension must be a positive integer, got {dim!r}")
        table = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for expts, coeff in items:
                expts = _check_expts(dim, expts)
                coeff = _coerce(coeff)
                if expts in table:
                    coeff = table[expts] + coeff
                if coeff:
                    table[expts] = coeff
                elif expts in table:
                    del table[expts]
        object.__setattr__(self, "_dim", dim)
        object.__setattr__(self, "_terms", table)

    def __setattr__(self, name, value):
        raise AttributeError("MPoly is immutable")

    # -- constructors

    @classmethod
    def zero(cls, dim: int) -> "MPoly":
        return cls(dim)

    @classmethod
    def constant(cls, dim: int, value) -> "MPoly":
        return cls(dim, {(0,) * dim: value})

    @classmethod
    def variable(cls, dim: int, index: int) -> "MPoly":
        """The variable x_index, 1-based."""
        if not 1 <= index <= dim:
            raise ValidationError(f"variable index {index} out of range 1..{dim}")
        expts = tuple(1 if i == index - 1 else 0 for i in range(dim))
        return cls(dim, {expts: 1})

    @classmethod
    def monomial(cls, dim: int, expts, coeff=1) -> "MPoly":
        return cls(dim, {tuple(expts): coeff})

    # -- inspection

    @property
    def dim(self) -> int:
        return self._dim

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def support(self):
        return set(self._terms)

    def coeff(self, expts):
        return self._terms.get(tuple(expts), Fraction(0))

    def terms(self):
        """Iterate (exponents, coefficient) pairs in canonical order."""
        for expts in sorted(self._terms, key=graded_lex_key):
            yield expts, self._terms[expts]

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self._dim == other._dim and self._terms == other._terms

    def __hash__(self):
        return hash((self._dim, frozenset(self._terms.items())))

    # -- arithmetic

    def _require_same_dim(self, other):
        if self._dim != other._dim:
            raise ValidationError(f"dimension mismatch: {self._dim} vs {other._dim}")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        self._require_same_dim(other)
        out = dict(self._terms)
        for expts, coeff in other._terms.items():
            acc = out.get(expts, 0) + coeff
            if acc:
                out[expts] = acc
            elif expts in out:
                del out[expts]
        return MPoly(self._dim, out)

    def __neg__(self):
        return MPoly(self._dim, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._require_same_dim(other)
        out = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(i + j for i, j in zip(ea, eb))
                acc = out.get(key, 0) + ca * cb
                if acc:
                    out[key] = acc
                elif key in out:
                    del out[key]
        return MPoly(self._dim, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, value) -> "MPoly":
        value = _coerce(value)
        if not value:
            return MPoly(self._dim)
        return MPoly(self._dim, {e: c * value for e, c in self._terms.items()})

    def __pow__(self, exponent: int) -> "MPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValidationError(f"polynomial power must be a nonnegative integer, got {exponent!r}")
        result = MPoly.constant(self._dim, 1)
        base = self
        n = exponent
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- calculus and evaluation

    def partial(self, index: int) -> "MPoly":
        """Exact partial derivative with respect to x_index (1-based)."""
        if not 1 <= index <= self._dim:
            raise ValidationError(f"variable index {index} out of range 1..{self._dim}")
        i = index - 1
        out = {}
        for expts, coeff in self._terms.items():
            e = expts[i]
            if e == 0:
                continue
            lowered = expts[:i] + (e - 1,) + expts[i + 1 :]
            out[lowered] = out.get(lowered, 0) + coeff * e
        return MPoly(self._dim, out)

    def eval_at(self, point):
        """Substitute the point coordinates, which may be Fractions or HPolys.

        The result lives in the ring of the coordinates: a Fraction for
        rational points, an HPoly for symbolic-h points.
        """
        point = tuple(point)
        if len(point) != self._dim:
            raise ValidationError(f"point arity {len(point)}, expected {self._dim}")
        coords = [c if isinstance(c, HPoly) else rat(c) for c in point]
        symbolic = any(isinstance(c, HPoly) for c in coords)
        # cache coordinate powers; degrees are small
        powers = [{} for _ in coords]

        def coord_pow(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = coords[i] ** e
            return cache[e]

        total = HPoly() if symbolic else Fraction(0)
        for expts, coeff in self._terms.items():
            val = coeff
            for i, e in enumerate(expts):
                if e:
                    val = val * coord_pow(i, e)
            total = total + val
        return total

    # -- rendering and serialization

    def pretty(self) -> str:
        """Human-readable canonical form, e.g. ``"4 - 2*x3 - 4*x1 + 4*x3*x1"``.

        Terms appear in canonical order; within a monomial the factors are
        printed from the highest variable index down, matching the term
        order in which x3 precedes x1.
        """
        if not self._terms:
            return "0"
        parts = []
        for expts, coeff in self.terms():
            factors = []
            for i in range(self._dim - 1, -1, -1):
                e = expts[i]
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            mono = "*".join(factors)
            if isinstance(coeff, HPoly):
                body = f"({coeff.pretty()})" + (f"*{mono}" if mono else "")
                parts.append(("+", body))
                continue
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if not mono:
                body = rat_str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{rat_str(mag)}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = first_body if first_sign == "+" else f"-{first_body}"
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_records(self) -> list:
        """Serialize as sorted ``{"exponents": [...], "coefficient": "p/q"}`` records."""
        out = []
        for expts, coeff in self.terms():
            if isinstance(coeff, HPoly):
                raise ValidationError("record serialization requires rational coefficients")
            out.append({"exponents": list(expts), "coefficient": rat_str(coeff)})
        return out

    @classmethod
    def from_records(cls, dim: int, records) -> "MPoly":
        terms = []
        for rec in records:
            if not isinstance(rec, dict) or set(rec) != {"exponents", "coefficient"}:
                raise ValidationError(f"bad polynomial record {rec!r}")
            terms.append((tuple(rec["exponents"]), rat(rec["coefficient"])))
        return cls(dim, terms)

    def __repr__(self):
        return f"MPoly({self._dim}, {self.pretty()})"


def apply_diff_op(op_poly: MPoly, f: MPoly) -> MPoly:
    """Apply the differential operator induced by ``op_poly`` to ``f``.

    Each term c*x^alpha of the operator polynomial contributes
    c * d^|alpha| f / dx1^a1..dxd^ad; the results are summed.  The constant
    polynomial 1 therefore acts as the identity.
    """
    if op_poly.dim != f.dim:
        raise ValidationError(f"dimension mismatch: {op_poly.dim} vs {f.dim}")
    total = MPoly.zero(f.dim)
    for expts, coeff in op_poly.terms():
        g = f
        for i, e in enumerate(expts):
            for _ in range(e):
                g = g.partial(i + 1)
                if g.is_zero():
                    break
            if g.is_zero():
                break
        if not g.is_zero():
            total = total + g.scale(coeff)
    return total
