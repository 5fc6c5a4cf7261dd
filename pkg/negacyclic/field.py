from functools import lru_cache
from itertools import product
from typing import Any, Iterator, List, Optional, Tuple, Union

from sympy import isprime

from .errors import (
    BudgetExceeded,
    DivisionByZero,
    FieldMismatch,
    NotInvertible,
    NotPrime,
    UndefinedGcd,
)
from .types import CoefficientTypes, Coefficients

__all__ = [
    "PrimeField",
    "FpPoly",
    "fp_inv",
    "poly_divmod",
    "poly_gcd",
    "poly_pow",
    "monic_divisors",
    "count_candidates",
]


class PrimeField:
    """
    The prime field F_p for an odd prime p.
    """

    __slots__ = ("p",)

    def __init__(self, p: int) -> None:
        if not isinstance(p, int) or p < 3 or p % 2 == 0 or not isprime(p):
            raise NotPrime(p)
        self.p = p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self) -> int:
        return hash((PrimeField, self.p))

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __call__(self, value: int) -> int:
        return value % self.p

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.p))

    def inv(self, value: int) -> int:
        return fp_inv(value, self)

    def poly(self, coeffs: CoefficientTypes = ()) -> "FpPoly":
        return FpPoly(coeffs, self)

    def monomial(self, degree: int, coeff: int = 1) -> "FpPoly":
        return FpPoly((0,) * degree + (coeff,), self)

    @property
    def zero(self) -> "FpPoly":
        return FpPoly((), self)

    @property
    def one(self) -> "FpPoly":
        return FpPoly((1,), self)

    @property
    def x(self) -> "FpPoly":
        return FpPoly((0, 1), self)


@lru_cache(maxsize=None)
def get_field(p: int) -> PrimeField:
    return PrimeField(p)


def fp_inv(a: int, field: PrimeField) -> int:
    p = field.p
    if a % p == 0:
        raise NotInvertible(a, p)
    return pow(a % p, p - 2, p)


def _normalize(coeffs: CoefficientTypes, p: int) -> Coefficients:
    values = [int(c) % p for c in coeffs]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class FpPoly:
    """
    Dense polynomial over F_p, coefficient i belonging to x^i.

    Values are immutable and normalized: coefficients live in [0, p-1] and
    the highest stored coefficient is nonzero. The zero polynomial stores no
    coefficients and its degree is None.
    """

    __slots__ = ("coeffs", "field")

    coeffs: Coefficients
    field: PrimeField

    def __init__(self, coeffs: CoefficientTypes, field: PrimeField) -> None:
        self.field = field
        self.coeffs = _normalize(coeffs, field.p)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @property
    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.coeffs == _normalize((other,), self.p)
        if not isinstance(other, FpPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((FpPoly, self.field.p, self.coeffs))

    def __repr__(self) -> str:
        return f"<FpPoly {self} over {self.field!r}>"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
                continue
            power = "x" if i == 1 else f"x^{i}"
            terms.append(power if c == 1 else f"{c}{power}")
        return "+".join(terms)

    def _coerce(self, other: Any) -> "FpPoly":
        if isinstance(other, FpPoly):
            if other.field != self.field:
                raise FieldMismatch(self.field, other.field)
            return other
        if isinstance(other, int):
            return FpPoly((other,), self.field)
        raise TypeError(f"Cannot combine FpPoly with {other!r}")

    def __add__(self, other: Union["FpPoly", int]) -> "FpPoly":
        other = self._coerce(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return FpPoly([self[i] + other[i] for i in range(size)], self.field)

    __radd__ = __add__

    def __neg__(self) -> "FpPoly":
        return FpPoly([-c for c in self.coeffs], self.field)

    def __sub__(self, other: Union["FpPoly", int]) -> "FpPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Union["FpPoly", int]) -> "FpPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["FpPoly", int]) -> "FpPoly":
        other = self._coerce(other)
        if not self.coeffs or not other.coeffs:
            return self.field.zero
        p = self.p
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                result[i + j] = (result[i + j] + a * b) % p
        return FpPoly(result, self.field)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "FpPoly":
        return poly_pow(self, e)

    def __divmod__(self, other: Union["FpPoly", int]) -> Tuple["FpPoly", "FpPoly"]:
        return poly_divmod(self, self._coerce(other))

    def __floordiv__(self, other: Union["FpPoly", int]) -> "FpPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: Union["FpPoly", int]) -> "FpPoly":
        return divmod(self, other)[1]

    def divides(self, other: "FpPoly") -> bool:
        return (other % self).is_zero

    def exact_div(self, other: "FpPoly") -> "FpPoly":
        """
        Quotient of an exact division. Raises ValueError on a remainder.
        """
        quotient, remainder = divmod(self, other)
        if remainder:
            raise ValueError(f"{other} does not divide {self}")
        return quotient

    def monic(self) -> "FpPoly":
        if not self.coeffs:
            return self
        return self * fp_inv(self.leading, self.field)

    def scale(self, factor: int) -> "FpPoly":
        return FpPoly([c * factor for c in self.coeffs], self.field)

    def shift(self, k: int) -> "FpPoly":
        if not self.coeffs:
            return self
        return FpPoly((0,) * k + self.coeffs, self.field)

    def negate_x(self) -> "FpPoly":
        """
        Substitute x -> -x.
        """
        return FpPoly(
            [-c if i % 2 else c for i, c in enumerate(self.coeffs)], self.field
        )

    def padded(self, size: int) -> Coefficients:
        if len(self.coeffs) > size:
            raise ValueError(f"{self} does not fit in {size} coefficients")
        return self.coeffs + (0,) * (size - len(self.coeffs))

    def evaluate(self, point: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = (value * point + c) % self.p
        return value

    def sort_key(self) -> Tuple[int, Coefficients]:
        return (-1 if self.degree is None else self.degree, self.coeffs)


def poly_divmod(f: FpPoly, g: FpPoly) -> Tuple[FpPoly, FpPoly]:
    if f.field != g.field:
        raise FieldMismatch(f.field, g.field)
    if g.is_zero:
        raise DivisionByZero(f"Division of {f} by the zero polynomial")

    field = f.field
    p = field.p
    remainder = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(remainder) - 1 < dg:
        return field.zero, f

    inv = fp_inv(g.leading, field)
    quotient = [0] * (len(remainder) - dg)
    for k in range(len(remainder) - 1 - dg, -1, -1):
        c = remainder[k + dg] * inv % p
        quotient[k] = c
        if c:
            for j, b in enumerate(g.coeffs):
                remainder[k + j] = (remainder[k + j] - c * b) % p

    return FpPoly(quotient, field), FpPoly(remainder[:dg], field)


def poly_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    if f.field != g.field:
        raise FieldMismatch(f.field, g.field)
    if f.is_zero and g.is_zero:
        raise UndefinedGcd("gcd(0, 0) is undefined")

    a, b = f, g
    while b:
        a, b = b, a % b
    return a.monic()


def poly_pow(base: FpPoly, e: int, modulus: Optional[FpPoly] = None) -> FpPoly:
    if e < 0:
        raise ValueError(f"Exponent must be non-negative, got {e}")

    result = base.field.one
    square = base if modulus is None else base % modulus
    while e:
        if e & 1:
            result = result * square
            if modulus is not None:
                result = result % modulus
        e >>= 1
        if e:
            square = square * square
            if modulus is not None:
                square = square % modulus

    if modulus is not None:
        result = result % modulus
    return result


def count_candidates(p: int, max_degree: int) -> int:
    """
    Number of monic polynomials of degree at most max_degree over F_p.
    """
    return sum(p ** d for d in range(max_degree + 1))


def _monic_candidates(field: PrimeField, degree: int) -> Iterator[FpPoly]:
    for lower in product(range(field.p), repeat=degree):
        yield FpPoly(lower + (1,), field)


def monic_divisors(modulus: FpPoly, budget: int = 10 ** 6) -> List[FpPoly]:
    """
    All monic divisors of a monic modulus, found by exhaustive trial division.

    Only candidates up to half the modulus degree are tried; each hit also
    yields its cofactor, and both are checked by an exact division. The
    budget therefore bounds the number of candidates of degree at most
    deg(m) // 2, that is sum(p^d for d <= deg(m) // 2), not the p^deg(m)
    monic polynomials of full degree.
    """
    if modulus.is_zero or not modulus.is_monic:
        raise ValueError(f"Modulus must be monic and nonzero, got {modulus}")

    field = modulus.field
    half = modulus.degree // 2
    needed = count_candidates(field.p, half)
    if needed > budget:
        raise BudgetExceeded(
            f"Divisor search of {modulus}", needed=needed, budget=budget
        )

    found = {}
    for degree in range(half + 1):
        for candidate in _monic_candidates(field, degree):
            quotient, remainder = divmod(modulus, candidate)
            if remainder:
                continue
            for divisor in (candidate, quotient):
                if not (modulus % divisor).is_zero:  # pragma: nocover
                    raise ArithmeticError(f"{divisor} failed to divide {modulus}")
                found[divisor.coeffs] = divisor

    return sorted(found.values(), key=FpPoly.sort_key)
