"""Exact multivariate polynomials over the rationals.

Terms are stored as ``{exponent_tuple: coefficient}`` with coefficients kept
as ``int`` whenever the value is integral and ``Fraction`` otherwise. The
canonical term order is graded lexicographic (descending), which fixes the
output of ``terms()``, ``__str__`` and the JSON form.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from ._kernels import mul_terms

Rational = int | Fraction


def as_rational(value) -> Rational:
    """Coerce to an exact rational; floats are refused."""
    if isinstance(value, bool):
        return int(value)
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, str):
        return as_rational(Fraction(value))
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


@lru_cache(maxsize=None)
def monomials(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """Exponent tuples of the given total degree, graded-lex descending."""
    if degree < 0:
        return ()
    if num_vars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(num_vars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(num_vars: int, degree: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomials(num_vars, degree))}


class Polynomial:
    """Immutable polynomial in ``num_vars`` variables."""

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.num_vars = num_vars
        clean: dict[tuple[int, ...], Rational] = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != num_vars:
                    raise ValueError(f"exponent {e} does not match {num_vars} variables")
                c = as_rational(c)
                if c:
                    clean[e] = clean.get(e, 0) + c
            clean = {e: as_rational(c) for e, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, num_vars: int, terms: dict) -> "Polynomial":
        p = cls.__new__(cls)
        p.num_vars = num_vars
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls._raw(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, value) -> "Polynomial":
        value = as_rational(value)
        return cls._raw(num_vars, {(0,) * num_vars: value} if value else {})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "Polynomial":
        if not 0 <= index < num_vars:
            raise IndexError(f"variable {index} out of range for {num_vars} variables")
        e = [0] * num_vars
        e[index] = 1
        return cls._raw(num_vars, {tuple(e): 1})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "Polynomial":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_rational(c)
            if c:
                e = [0] * n
                e[i] = 1
                terms[tuple(e)] = c
        return cls._raw(n, terms)

    # -- inspection -------------------------------------------------------
    def terms(self) -> list[tuple[tuple[int, ...], Rational]]:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, exps: tuple[int, ...]) -> Rational:
        return self._terms.get(tuple(exps), 0)

    def as_dict(self) -> dict[tuple[int, ...], Rational]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_component(self, degree: int) -> "Polynomial":
        return Polynomial._raw(self.num_vars, {e: c for e, c in self._terms.items() if sum(e) == degree})

    def homogeneous_components(self) -> dict[int, "Polynomial"]:
        parts: dict[int, dict] = {}
        for e, c in self._terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._raw(self.num_vars, t) for d, t in sorted(parts.items())}

    def leading_term(self) -> tuple[tuple[int, ...], Rational]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms, key=grlex_key)
        return e, self._terms[e]

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive integral."""
        from math import gcd, lcm

        if not self._terms:
            return Fraction(1)
        nums = [Fraction(c).numerator for c in self._terms.values()]
        dens = [Fraction(c).denominator for c in self._terms.values()]
        return Fraction(gcd(*nums), lcm(*dens))

    def primitive(self) -> "Polynomial":
        """Integral, unit content, positive leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return self.scale(1 / c)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial") -> None:
        if self.num_vars != other.num_vars:
            raise ValueError(f"variable-count mismatch: {self.num_vars} vs {other.num_vars}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        return Polynomial.constant(self.num_vars, other)

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = as_rational(v)
            else:
                out.pop(e, None)
        return Polynomial._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, factor) -> "Polynomial":
        factor = as_rational(factor)
        if not factor:
            return Polynomial.zero(self.num_vars)
        return Polynomial._raw(self.num_vars, {e: as_rational(c * factor) for e, c in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        self._check(other)
        if not self._terms or not other._terms:
            return Polynomial.zero(self.num_vars)
        raw = mul_terms(self._terms, other._terms)
        return Polynomial._raw(self.num_vars, {e: as_rational(c) for e, c in raw.items()})

    def __rmul__(self, other) -> "Polynomial":
        return self.scale(other)

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("non-negative integer exponent required")
        result = Polynomial.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.num_vars == other.num_vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.num_vars, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num_vars, frozenset(self._terms.items())))
        return self._hash

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises if a remainder appears."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = divisor.leading_term()
        rem = dict(self._terms)
        quot: dict = {}
        while rem:
            e = max(rem, key=grlex_key)
            c = rem[e]
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if min(shift) < 0:
                raise ValueError("polynomial division is not exact")
            q = as_rational(Fraction(c) / lead_c)
            quot[shift] = q
            for de, dc in divisor._terms.items():
                k = tuple(a + b for a, b in zip(de, shift))
                v = rem.get(k, 0) - q * dc
                if v:
                    rem[k] = as_rational(v)
                else:
                    rem.pop(k, None)
        return Polynomial._raw(self.num_vars, quot)

    # -- calculus / substitution -----------------------------------------
    def diff(self, var: int) -> "Polynomial":
        if not 0 <= var < self.num_vars:
            raise IndexError(f"variable {var} out of range for {self.num_vars} variables")
        out = {}
        for e, c in self._terms.items():
            k = e[var]
            if k:
                ne = e[:var] + (k - 1,) + e[var + 1:]
                out[ne] = c * k
        return Polynomial._raw(self.num_vars, out)

    def gradient(self) -> list["Polynomial"]:
        return [self.diff(i) for i in range(self.num_vars)]

    def evaluate(self, point: Sequence) -> Rational:
        if len(point) != self.num_vars:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.num_vars}")
        point = [as_rational(x) for x in point]
        total = 0
        for e, c in self._terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total += v
        return as_rational(total)

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Replace variable i by ``images[i]`` (all in a common ring)."""
        if len(images) != self.num_vars:
            raise ValueError(f"{len(images)} images for {self.num_vars} variables")
        if not images:
            return self
        n = images[0].num_vars
        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(n, 1)} for _ in images]

        def power(i: int, k: int) -> Polynomial:
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        total = Polynomial.zero(n)
        for e, c in self._terms.items():
            term = Polynomial.constant(n, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def compose_linear(self, matrix: Sequence[Sequence]) -> "Polynomial":
        """Substitute ``x_i -> sum_j matrix[i][j] * y_j``."""
        if len(matrix) != self.num_vars:
            raise ValueError(f"matrix has {len(matrix)} rows, expected {self.num_vars}")
        return self.substitute([Polynomial.linear(row) for row in matrix])

    def extend(self, num_vars: int, offset: int = 0) -> "Polynomial":
        """Embed into a ring with more variables, shifting indices by ``offset``."""
        if offset + self.num_vars > num_vars:
            raise ValueError("target ring too small")
        pad_l = (0,) * offset
        pad_r = (0,) * (num_vars - offset - self.num_vars)
        return Polynomial._raw(num_vars, {pad_l + e + pad_r: c for e, c in self._terms.items()})

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "vars": self.num_vars,
            "terms": [[list(e), str(Fraction(c).numerator), str(Fraction(c).denominator)] for e, c in self.terms()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Polynomial":
        n = int(data["vars"])
        terms = {}
        for item in data["terms"]:
            exps, num, den = item
            terms[tuple(int(x) for x in exps)] = Fraction(int(num), int(den))
        return cls(n, terms)

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self._terms:
            return "0"
        names = names or [f"x{i}" for i in range(self.num_vars)]
        pieces = []
        for e, c in self.terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"Polynomial({self.num_vars}, {self.format()!r})"


def variables(num_vars: int) -> list[Polynomial]:
    return [Polynomial.variable(num_vars, i) for i in range(num_vars)]


def poly_sum(polys: Iterable[Polynomial], num_vars: int) -> Polynomial:
    acc: dict = {}
    for p in polys:
        if p.num_vars != num_vars:
            raise ValueError(f"variable-count mismatch: {p.num_vars} vs {num_vars}")
        for e, c in p._terms.items():
            acc[e] = acc.get(e, 0) + c
    return Polynomial(num_vars, acc)


# module-level ring operations
def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def scale(p: Polynomial, c) -> Polynomial:
    return p.scale(c)


def compose_linear(p: Polynomial, matrix: Sequence[Sequence]) -> Polynomial:
    return p.compose_linear(matrix)


def partial_derivative(p: Polynomial, var: int) -> Polynomial:
    return p.diff(var)
