"""
The ring R = F_p + uF_p + vF_p + uvF_p with u^2 = v^2 = 0 and uv = vu, and
polynomials over R reduced modulo x^n - 1 or x^n + 1.
"""
from enum import Enum
from itertools import product
from typing import (
    Any,
    Dict,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np

from .errors import (
    FieldMismatch,
    ModulusMismatch,
    NotDivisibleSetup,
    OddLengthRequired,
)
from .field import FpPoly, PrimeField
from .linalg import FpBasis
from .parsing import format_components, parse_components, to_poly
from .types import Quadruple, RPolyTypes

__all__ = [
    "RElem",
    "IdealTag",
    "IdealClass",
    "Sign",
    "ModulusKind",
    "RPoly",
    "r_mul",
    "r_classify",
    "rpoly_mul",
    "rpoly_divmod_regular",
    "residue",
    "is_regular",
    "has_unit_coefficient",
    "phi",
    "to_rpoly",
    "ideal_of",
    "ideal_span",
    "all_ideals",
    "elements",
]

SYMBOLS = ("", "u", "v", "uv")
UNITS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


class RElem:
    """
    The element a + ub + vc + uvd of R.
    """

    __slots__ = ("field", "parts")

    field: PrimeField
    parts: Quadruple

    def __init__(
        self, a: int = 0, b: int = 0, c: int = 0, d: int = 0, *, field: PrimeField
    ) -> None:
        self.field = field
        self.parts = (a % field.p, b % field.p, c % field.p, d % field.p)

    @classmethod
    def from_parts(cls, parts: Sequence[int], field: PrimeField) -> "RElem":
        return cls(*parts, field=field)

    @property
    def a(self) -> int:
        return self.parts[0]

    @property
    def b(self) -> int:
        return self.parts[1]

    @property
    def c(self) -> int:
        return self.parts[2]

    @property
    def d(self) -> int:
        return self.parts[3]

    @property
    def is_unit(self) -> bool:
        return self.a != 0

    def __bool__(self) -> bool:
        return any(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RElem):
            return NotImplemented
        return self.field == other.field and self.parts == other.parts

    def __hash__(self) -> int:
        return hash((RElem, self.field.p, self.parts))

    def __repr__(self) -> str:
        return f"<RElem {self} over {self.field!r}>"

    def __str__(self) -> str:
        terms = [
            f"{value}{symbol}" if value != 1 or not symbol else symbol
            for value, symbol in zip(self.parts, SYMBOLS)
            if value
        ]
        return "+".join(terms) or "0"

    def _coerce(self, other: Any) -> "RElem":
        if isinstance(other, int):
            return RElem(other, field=self.field)
        if not isinstance(other, RElem):
            raise TypeError(f"Cannot combine RElem with {other!r}")
        if other.field != self.field:
            raise FieldMismatch(self.field, other.field)
        return other

    def __add__(self, other: Union["RElem", int]) -> "RElem":
        other = self._coerce(other)
        parts = (x + y for x, y in zip(self.parts, other.parts))
        return RElem(*parts, field=self.field)

    __radd__ = __add__

    def __neg__(self) -> "RElem":
        return RElem(*(-x for x in self.parts), field=self.field)

    def __sub__(self, other: Union["RElem", int]) -> "RElem":
        return self + (-self._coerce(other))

    def __mul__(self, other: Union["RElem", int]) -> "RElem":
        return r_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def inverse(self) -> "RElem":
        """
        Inverse of a unit: a^-1 (1 - m + m^2) for the nilpotent part m = n/a.
        """
        a_inv = self.field.inv(self.a)
        b, c, d = (a_inv * x for x in self.parts[1:])
        return RElem(1, -b, -c, -d + 2 * b * c, field=self.field) * a_inv

    def classify(self) -> "IdealClass":
        return r_classify(self)


def r_mul(x: RElem, y: RElem) -> RElem:
    if x.field != y.field:
        raise FieldMismatch(x.field, y.field)
    a1, b1, c1, d1 = x.parts
    a2, b2, c2, d2 = y.parts
    return RElem(
        a1 * a2,
        a1 * b2 + b1 * a2,
        a1 * c2 + c1 * a2,
        a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        field=x.field,
    )


class IdealTag(Enum):
    ZERO = "0"
    U = "<u>"
    V = "<v>"
    UV = "<uv>"
    U_PLUS_ALPHA_V = "<u+av>"
    MAXIMAL = "<u,v>"
    UNIT = "<1>"


class IdealClass(NamedTuple):
    tag: IdealTag
    alpha: Optional[int] = None

    def __str__(self) -> str:
        if self.tag is IdealTag.U_PLUS_ALPHA_V:
            return f"<u+{self.alpha}v>"
        return self.tag.value

    def generators(self, field: PrimeField) -> List[RElem]:
        if self.tag is IdealTag.U_PLUS_ALPHA_V:
            if not self.alpha or self.alpha % field.p == 0:
                raise ValueError(f"<u+av> needs a nonzero alpha, got {self.alpha}")
            return [RElem(0, 1, self.alpha, field=field)]
        return {
            IdealTag.ZERO: [],
            IdealTag.U: [RElem(0, 1, field=field)],
            IdealTag.V: [RElem(0, 0, 1, field=field)],
            IdealTag.UV: [RElem(0, 0, 0, 1, field=field)],
            IdealTag.MAXIMAL: [RElem(0, 1, field=field), RElem(0, 0, 1, field=field)],
            IdealTag.UNIT: [RElem(1, field=field)],
        }[self.tag]


def r_classify(x: RElem) -> IdealClass:
    """
    Identifies the principal ideal generated by x.

    Units generate R. Otherwise x = ub + vc + uvd, and ub + vc + uvd times a
    unit reaches u + (c/b)v whenever b and c are both nonzero.
    """
    a, b, c, d = x.parts
    if a:
        return IdealClass(IdealTag.UNIT)
    if b and c:
        return IdealClass(IdealTag.U_PLUS_ALPHA_V, c * x.field.inv(b) % x.field.p)
    if b:
        return IdealClass(IdealTag.U)
    if c:
        return IdealClass(IdealTag.V)
    if d:
        return IdealClass(IdealTag.UV)
    return IdealClass(IdealTag.ZERO)


def ideal_span(generators: Sequence[RElem], field: PrimeField) -> FpBasis:
    """
    The ideal generated by the given elements, as an F_p-subspace of F_p^4.
    """
    monomials = [RElem(*unit, field=field) for unit in UNITS]
    vectors = [(m * g).parts for g in generators for m in monomials]
    return FpBasis.span(vectors, field, 1)


def ideal_of(element: RElem) -> FpBasis:
    return ideal_span([element], element.field)


def all_ideals(field: PrimeField) -> Dict[IdealClass, FpBasis]:
    """
    Every ideal of R: 0, <u>, <v>, <uv>, the p - 1 ideals <u+av>, <u,v>, R.
    """
    shapes = [
        IdealClass(tag) for tag in IdealTag if tag is not IdealTag.U_PLUS_ALPHA_V
    ]
    shapes[4:4] = [
        IdealClass(IdealTag.U_PLUS_ALPHA_V, alpha) for alpha in range(1, field.p)
    ]
    return {shape: ideal_span(shape.generators(field), field) for shape in shapes}


def elements(field: PrimeField) -> Iterator[RElem]:
    for parts in product(range(field.p), repeat=4):
        yield RElem(*parts, field=field)


class Sign(Enum):
    """
    Value of x^n in the quotient ring.
    """

    CYCLIC = 1
    NEGACYCLIC = -1

    @property
    def opposite(self) -> "Sign":
        return Sign.NEGACYCLIC if self is Sign.CYCLIC else Sign.CYCLIC


class ModulusKind:
    """
    The quotient R[x]/(x^n - 1) or R[x]/(x^n + 1) for an odd length n.
    """

    __slots__ = ("sign", "n")

    def __init__(self, sign: Sign, n: int) -> None:
        if not isinstance(n, int) or n < 1 or n % 2 == 0:
            raise OddLengthRequired(n)
        self.sign = sign
        self.n = n

    @classmethod
    def cyclic(cls, n: int) -> "ModulusKind":
        return cls(Sign.CYCLIC, n)

    @classmethod
    def negacyclic(cls, n: int) -> "ModulusKind":
        return cls(Sign.NEGACYCLIC, n)

    @property
    def opposite(self) -> "ModulusKind":
        return ModulusKind(self.sign.opposite, self.n)

    def polynomial(self, field: PrimeField) -> FpPoly:
        """
        x^n - 1 or x^n + 1.
        """
        return field.monomial(self.n) - self.sign.value

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModulusKind):
            return NotImplemented
        return self.sign is other.sign and self.n == other.n

    def __hash__(self) -> int:
        return hash((ModulusKind, self.sign, self.n))

    def __repr__(self) -> str:
        return f"{self.sign.name.capitalize()}({self.n})"


def _wrap(poly: FpPoly, modulus: Optional[ModulusKind]) -> FpPoly:
    if modulus is None or len(poly) <= modulus.n:
        return poly
    n, wrap = modulus.n, modulus.sign.value
    folded = [0] * n
    for i, c in enumerate(poly.coeffs):
        turns, at = divmod(i, n)
        folded[at] += c * wrap ** turns
    return FpPoly(folded, poly.field)


class RPoly:
    """
    f0 + u*f1 + v*f2 + uv*f3 over R, reduced modulo x^n -/+ 1.

    A modulus of None means plain R[x], used for exact division.
    """

    __slots__ = ("parts", "field", "modulus")

    parts: Tuple[FpPoly, FpPoly, FpPoly, FpPoly]
    field: PrimeField
    modulus: Optional[ModulusKind]

    def __init__(
        self,
        f0: FpPoly,
        f1: Optional[FpPoly] = None,
        f2: Optional[FpPoly] = None,
        f3: Optional[FpPoly] = None,
        *,
        modulus: Optional[ModulusKind] = None,
    ) -> None:
        field = f0.field
        parts = [f0] + [field.zero if f is None else f for f in (f1, f2, f3)]
        for f in parts:
            if f.field != field:
                raise FieldMismatch(field, f.field)
        self.field = field
        self.modulus = modulus
        f0, f1, f2, f3 = (_wrap(f, modulus) for f in parts)
        self.parts = (f0, f1, f2, f3)

    @classmethod
    def parse(
        cls, text: str, field: PrimeField, modulus: Optional[ModulusKind] = None
    ) -> "RPoly":
        return cls(*parse_components(text, field), modulus=modulus)

    @classmethod
    def zero(cls, field: PrimeField, modulus: Optional[ModulusKind] = None) -> "RPoly":
        return cls(field.zero, modulus=modulus)

    @classmethod
    def monomial(
        cls, coeff: RElem, degree: int = 0, modulus: Optional[ModulusKind] = None
    ) -> "RPoly":
        field = coeff.field
        return cls(*(field.monomial(degree, c) for c in coeff.parts), modulus=modulus)

    @classmethod
    def from_vector(
        cls, vector: Sequence[int], field: PrimeField, modulus: ModulusKind
    ) -> "RPoly":
        """
        Inverse of to_vector: four blocks of n coefficients, f0 first.
        """
        blocks = np.asarray(vector, dtype=np.int64).reshape(4, modulus.n)
        return cls(*(field.poly(block.tolist()) for block in blocks), modulus=modulus)

    @property
    def f0(self) -> FpPoly:
        return self.parts[0]

    @property
    def f1(self) -> FpPoly:
        return self.parts[1]

    @property
    def f2(self) -> FpPoly:
        return self.parts[2]

    @property
    def f3(self) -> FpPoly:
        return self.parts[3]

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> Optional[int]:
        return None if self.modulus is None else self.modulus.n

    @property
    def is_zero(self) -> bool:
        return not any(self.parts)

    @property
    def degree(self) -> Optional[int]:
        """
        Degree of the residue, None when the residue is zero.
        """
        return self.f0.degree

    @property
    def max_degree(self) -> Optional[int]:
        degrees = [f.degree for f in self.parts if f.degree is not None]
        return max(degrees) if degrees else None

    @property
    def length(self) -> int:
        if self.modulus is not None:
            return self.modulus.n
        return 0 if self.max_degree is None else self.max_degree + 1

    def __bool__(self) -> bool:
        return not self.is_zero

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RPoly):
            return NotImplemented
        return (
            self.field == other.field
            and self.modulus == other.modulus
            and self.parts == other.parts
        )

    def __hash__(self) -> int:
        return hash((RPoly, self.field.p, self.modulus, self.parts))

    def __repr__(self) -> str:
        return f"<RPoly {self} mod {self.modulus!r}>"

    def __str__(self) -> str:
        return format_components(self.parts)

    def coefficient(self, i: int) -> RElem:
        return RElem(*(f[i] for f in self.parts), field=self.field)

    def coefficients(self) -> List[RElem]:
        return [self.coefficient(i) for i in range(self.length)]

    def support(self) -> List[int]:
        return [i for i in range(self.length) if any(f[i] for f in self.parts)]

    def residue(self) -> FpPoly:
        return residue(self)

    def is_regular(self) -> bool:
        return is_regular(self)

    def _coerce(self, other: Any) -> "RPoly":
        if isinstance(other, RPoly):
            if other.field != self.field:
                raise FieldMismatch(self.field, other.field)
            if other.modulus != self.modulus:
                raise ModulusMismatch(self.modulus, other.modulus)
            return other
        if isinstance(other, FpPoly):
            return RPoly(other, modulus=self.modulus)
        if isinstance(other, int):
            return RPoly(self.field.poly((other,)), modulus=self.modulus)
        if isinstance(other, RElem):
            return RPoly.monomial(other, modulus=self.modulus)
        raise TypeError(f"Cannot combine RPoly with {other!r}")

    def __add__(self, other: Any) -> "RPoly":
        other = self._coerce(other)
        return RPoly(
            *(f + g for f, g in zip(self.parts, other.parts)), modulus=self.modulus
        )

    __radd__ = __add__

    def __neg__(self) -> "RPoly":
        return RPoly(*(-f for f in self.parts), modulus=self.modulus)

    def __sub__(self, other: Any) -> "RPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "RPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "RPoly":
        return rpoly_mul(self, self._coerce(other))

    __rmul__ = __mul__

    def times_u(self) -> "RPoly":
        f0, _, f2, _ = self.parts
        zero = self.field.zero
        return RPoly(zero, f0, zero, f2, modulus=self.modulus)

    def times_v(self) -> "RPoly":
        f0, f1, _, _ = self.parts
        zero = self.field.zero
        return RPoly(zero, zero, f0, f1, modulus=self.modulus)

    def times_uv(self) -> "RPoly":
        zero = self.field.zero
        return RPoly(zero, zero, zero, self.f0, modulus=self.modulus)

    def shift(self, k: int = 1) -> "RPoly":
        """
        Multiply by x^k.
        """
        return RPoly(*(f.shift(k) for f in self.parts), modulus=self.modulus)

    def lift(self) -> "RPoly":
        """
        The same representative as an element of R[x].
        """
        return RPoly(*self.parts)

    def reduce(self, modulus: ModulusKind) -> "RPoly":
        return RPoly(*self.parts, modulus=modulus)

    def phi(self) -> "RPoly":
        return phi(self)

    def to_vector(self) -> np.ndarray:
        if self.modulus is None:
            raise ModulusMismatch(None, "a reduced RPoly")
        n = self.modulus.n
        return np.array([c for f in self.parts for c in f.padded(n)], dtype=np.int64)


def rpoly_mul(f: RPoly, g: RPoly) -> RPoly:
    if f.field != g.field:
        raise FieldMismatch(f.field, g.field)
    if f.modulus != g.modulus:
        raise ModulusMismatch(f.modulus, g.modulus)
    a1, b1, c1, d1 = f.parts
    a2, b2, c2, d2 = g.parts
    return RPoly(
        a1 * a2,
        a1 * b2 + b1 * a2,
        a1 * c2 + c1 * a2,
        a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        modulus=f.modulus,
    )


def residue(f: RPoly) -> FpPoly:
    return f.f0


def is_regular(f: RPoly) -> bool:
    return not residue(f).is_zero


def has_unit_coefficient(f: RPoly) -> bool:
    return any(coeff.is_unit for coeff in f.coefficients())


def phi(f: RPoly) -> RPoly:
    """
    Substitutes x -> -x, moving between the cyclic and negacyclic quotients.
    """
    modulus = None if f.modulus is None else f.modulus.opposite
    return RPoly(*(part.negate_x() for part in f.parts), modulus=modulus)


def rpoly_divmod_regular(f: RPoly, g: RPoly) -> Tuple[RPoly, RPoly]:
    """
    Division in R[x] by a divisor whose top coefficient is a unit.

    Both arguments are taken as representatives in R[x] and the quotient and
    remainder are returned there, with every component of the remainder of
    lower degree than the residue of g.
    """
    if f.field != g.field:
        raise FieldMismatch(f.field, g.field)
    if not is_regular(g):
        raise NotDivisibleSetup(f"Divisor {g} is not regular")
    m = g.degree
    if g.max_degree != m:
        raise NotDivisibleSetup(f"Leading coefficient of {g} is not a unit")

    divisor = g.lift()
    lead_inv = divisor.coefficient(m).inverse()
    quotient = RPoly.zero(f.field)
    remainder = f.lift()
    while remainder.max_degree is not None and remainder.max_degree >= m:
        k = remainder.max_degree
        term = RPoly.monomial(remainder.coefficient(k) * lead_inv, k - m)
        quotient = quotient + term
        remainder = remainder - term * divisor

    return quotient, remainder


def to_rpoly(
    value: RPolyTypes, field: PrimeField, modulus: Optional[ModulusKind] = None
) -> RPoly:
    """
    Coerces "f0;f1;f2;f3" text, up to four polynomials or an RPoly.
    """
    if isinstance(value, RPoly):
        if value.field != field:
            raise FieldMismatch(field, value.field)
        if value.modulus != modulus:
            raise ModulusMismatch(modulus, value.modulus)
        return value
    if isinstance(value, str):
        return RPoly.parse(value, field, modulus)
    parts = [to_poly(part, field) for part in value]
    if not 1 <= len(parts) <= 4:
        raise ValueError(f"Expected one to four components, got {len(parts)}")
    return RPoly(*parts, modulus=modulus)
