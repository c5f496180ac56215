"""Exact arithmetic foundation: sparse integer Laurent polynomials, prime
fields, content, reduction mod p, univariate resultants and p-adic valuations.

A Laurent polynomial in s variables is stored as a finite map from exponent
vectors (integer s-tuples) to nonzero integer coefficients.  The canonical
serialized form sorts terms lexicographically by exponent, so equal
polynomials print identically; this is relied on by the golden tests.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotPrime, ZeroArgument, ZeroInput, ZeroPolynomial


def is_prime(n: int) -> bool:
    """Trial division; the primes appearing here are small."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _check_prime(p):
    if not isinstance(p, int) or not is_prime(p):
        raise NotPrime(f"{p} is not a prime number")


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of |n|, ascending."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class LaurentPolynomial:
    """Sparse exact-integer Laurent polynomial in ``rank`` variables.

    Immutable after construction; all arithmetic returns new objects.
    """

    __slots__ = ("terms", "rank", "_key")

    def __init__(self, terms, rank):
        clean = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != rank:
                raise ValueError(f"exponent {exps} has arity {len(exps)}, expected {rank}")
            coeff = int(coeff)
            if coeff != 0:
                clean[exps] = clean.get(exps, 0) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_key", tuple(sorted(clean.items())))

    def __setattr__(self, *a):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, rank):
        return cls({}, rank)

    @classmethod
    def constant(cls, c, rank):
        return cls({(0,) * rank: c}, rank)

    @classmethod
    def monomial(cls, coeff, exps):
        return cls({tuple(exps): coeff}, len(tuple(exps)))

    @classmethod
    def variable(cls, i, rank):
        e = [0] * rank
        e[i] = 1
        return cls({tuple(e): 1}, rank)

    # -- predicates ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def is_unit(self):
        """Units of Z[x_1^{+-1},...] are +-monomials."""
        return len(self.terms) == 1 and abs(next(iter(self.terms.values()))) == 1

    def is_constant(self):
        return all(e == (0,) * self.rank for e in self.terms)

    # -- accessors -----------------------------------------------------

    def support(self):
        return sorted(self.terms)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), 0)

    def degree_in(self, var):
        if not self.terms:
            raise ZeroPolynomial("degree of zero polynomial")
        return max(e[var] for e in self.terms)

    def min_degree_in(self, var):
        if not self.terms:
            raise ZeroPolynomial("degree of zero polynomial")
        return min(e[var] for e in self.terms)

    def clear_monomial(self):
        """Divide by the monomial gcd so every min exponent becomes 0."""
        if not self.terms:
            return self
        shift = tuple(min(e[i] for e in self.terms) for i in range(self.rank))
        if all(v == 0 for v in shift):
            return self
        return LaurentPolynomial(
            {tuple(a - b for a, b in zip(e, shift)): c for e, c in self.terms.items()},
            self.rank,
        )

    # -- ring operations -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.rank != self.rank:
                raise ValueError("rank mismatch")
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other, self.rank)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(terms, self.rank)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self.terms.items()}, self.rank)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPolynomial(terms, self.rank)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = LaurentPolynomial.constant(1, self.rank)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPolynomial)
            and self.rank == other.rank
            and self._key == other._key
        )

    def __hash__(self):
        return hash((self.rank, self._key))

    def __repr__(self):
        return f"LaurentPolynomial({self.canonical()!r}, rank={self.rank})"

    # -- canonical text -----------------------------------------------------

    def canonical(self, names=None):
        """Deterministic text form: terms lex-sorted by exponent, explicit signs.

        The output re-parses to the same polynomial.
        """
        if not self.terms:
            return "0"
        if names is None:
            names = _default_names(self.rank)
        parts = []
        for exps, coeff in sorted(self.terms.items()):
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e != 0:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    __str__ = canonical


def _default_names(rank):
    if rank == 1:
        return ("x",)
    if rank == 2:
        return ("x", "y")
    return tuple(f"x{i+1}" for i in range(rank))


@dataclass(frozen=True)
class ZeroIdeal:
    """The defining datum 'f absent': A = ZQ itself."""

    rank: int


class ResiduePolynomial:
    """Laurent polynomial with coefficients in F_p; zero coefficients dropped."""

    __slots__ = ("terms", "prime", "rank", "_key")

    def __init__(self, terms, prime, rank):
        _check_prime(prime)
        clean = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != rank:
                raise ValueError(f"exponent {exps} has arity {len(exps)}, expected {rank}")
            c = int(coeff) % prime
            if c:
                clean[exps] = (clean.get(exps, 0) + c) % prime
                if clean[exps] == 0:
                    del clean[exps]
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "prime", prime)
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "_key", tuple(sorted(clean.items())))

    def __setattr__(self, *a):
        raise AttributeError("ResiduePolynomial is immutable")

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def support(self):
        return sorted(self.terms)

    def _coerce(self, other):
        if isinstance(other, ResiduePolynomial):
            if other.prime != self.prime or other.rank != self.rank:
                raise ValueError("prime/rank mismatch")
            return other
        if isinstance(other, int):
            return ResiduePolynomial({(0,) * self.rank: other}, self.prime, self.rank)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return ResiduePolynomial(terms, self.prime, self.rank)

    def __neg__(self):
        return ResiduePolynomial({e: -c for e, c in self.terms.items()}, self.prime, self.rank)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return ResiduePolynomial(terms, self.prime, self.rank)

    def clear_monomial(self):
        if not self.terms:
            return self
        shift = tuple(min(e[i] for e in self.terms) for i in range(self.rank))
        if all(v == 0 for v in shift):
            return self
        return ResiduePolynomial(
            {tuple(a - b for a, b in zip(e, shift)): c for e, c in self.terms.items()},
            self.prime,
            self.rank,
        )

    def scaled(self, c):
        return ResiduePolynomial({e: v * c for e, v in self.terms.items()}, self.prime, self.rank)

    def __eq__(self, other):
        return (
            isinstance(other, ResiduePolynomial)
            and self.prime == other.prime
            and self.rank == other.rank
            and self._key == other._key
        )

    def __hash__(self):
        return hash((self.prime, self.rank, self._key))

    def __repr__(self):
        body = " + ".join(f"{c}*{e}" for e, c in sorted(self.terms.items())) or "0"
        return f"ResiduePolynomial<{body} mod {self.prime}>"


class ValuationKind(enum.Enum):
    ZERO = "zero"
    P_ADIC = "p-adic"
    RESIDUE_ZERO = "residue-zero"


@dataclass(frozen=True)
class CoefficientValuation:
    """Valuation of the coefficient ring Z (or of F_p in the residue case).

    Normalised so that v(p) = 1 in the p-adic case.
    """

    kind: ValuationKind
    p: int | None = None

    def __post_init__(self):
        if self.kind is ValuationKind.ZERO:
            if self.p is not None:
                raise ValueError("zero valuation carries no prime")
        else:
            _check_prime(self.p)

    @classmethod
    def zero(cls):
        return cls(ValuationKind.ZERO)

    @classmethod
    def p_adic(cls, p):
        return cls(ValuationKind.P_ADIC, p)

    @classmethod
    def residue_zero(cls, p):
        return cls(ValuationKind.RESIDUE_ZERO, p)

    def of_int(self, n):
        """Valuation of a nonzero integer coefficient."""
        if self.kind is ValuationKind.ZERO:
            return Fraction(0)
        if self.kind is ValuationKind.P_ADIC:
            return Fraction(padic_valuation(n, self.p))
        raise ValueError("residue-zero valuation applies to F_p coefficients, all of height 0")

    def label(self):
        if self.kind is ValuationKind.ZERO:
            return "zero"
        if self.kind is ValuationKind.P_ADIC:
            return f"{self.p}-adic"
        return f"residue-zero({self.p})"


# -- operations ------------------------------------------------------------


def content(f: LaurentPolynomial) -> int:
    """gcd of the coefficients of f."""
    if f.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    return math.gcd(*[abs(c) for c in f.terms.values()])


def reduce_mod_p(f: LaurentPolynomial, p: int) -> ResiduePolynomial:
    """Coefficientwise reduction; the result may be the zero residue polynomial."""
    _check_prime(p)
    return ResiduePolynomial(f.terms, p, f.rank)


def padic_valuation(n: int, p: int) -> int:
    """Largest e with p^e | n, for n != 0."""
    _check_prime(p)
    if n == 0:
        raise ZeroArgument("the p-adic valuation of 0 is infinite")
    n = abs(n)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _as_univariate(f: LaurentPolynomial, var: int):
    """Coefficients of f as polynomials in the remaining variables, keyed by
    the exponent of ``var`` shifted to start at 0."""
    lo = f.min_degree_in(var)
    coeffs = {}
    for exps, c in f.terms.items():
        k = exps[var] - lo
        rest = exps[:var] + (0,) + exps[var + 1 :]
        coeffs.setdefault(k, {})[rest] = coeffs.get(k, {}).get(rest, 0) + c
    return {
        k: LaurentPolynomial(t, f.rank) for k, t in coeffs.items() if any(t.values())
    }


def _det(matrix, rank):
    """Determinant over the Laurent ring by cofactor expansion with memoisation
    on column subsets; Sylvester matrices here are small."""
    n = len(matrix)
    one = LaurentPolynomial.constant(1, rank)
    zero = LaurentPolynomial.zero(rank)
    if n == 0:
        return one
    from functools import lru_cache

    @lru_cache(maxsize=None)
    def minor(row, cols):
        if row == n:
            return one
        acc = zero
        sign = 1
        for idx, col in enumerate(cols):
            entry = matrix[row][col]
            if not entry.is_zero():
                sub = minor(row + 1, cols[:idx] + cols[idx + 1 :])
                term = entry * sub
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        return acc

    return minor(0, tuple(range(n)))


def resultant_univariate(a: LaurentPolynomial, b: LaurentPolynomial, var: int) -> LaurentPolynomial:
    """Sylvester resultant eliminating variable ``var``.

    Laurent inputs are first normalised so the eliminated variable has
    nonnegative exponents (multiplying by a monomial unit, which changes the
    resultant only by a unit).  Zero iff a and b share a factor of positive
    degree in ``var``.
    """
    if a.is_zero() or b.is_zero():
        raise ZeroInput("resultant of the zero polynomial")
    if a.rank != b.rank:
        raise ValueError("rank mismatch")
    pa = _as_univariate(a, var)
    pb = _as_univariate(b, var)
    m = max(pa)
    n = max(pb)
    rank = a.rank
    zero = LaurentPolynomial.zero(rank)
    if m == 0 and n == 0:
        return LaurentPolynomial.constant(1, rank)
    if m == 0:
        return pa[0] ** n
    if n == 0:
        return pb[0] ** m
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for k, c in pa.items():
            row[i + (m - k)] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k, c in pb.items():
            row[i + (n - k)] = c
        rows.append(row)
    return _det(rows, rank)
