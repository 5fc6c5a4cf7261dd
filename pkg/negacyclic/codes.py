import logging
import warnings
from abc import ABC
from math import gcd
from types import MappingProxyType
from typing import (
    Any,
    ClassVar,
    Dict,
    Iterable,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Type,
    Union,
)

import numpy as np

from .errors import (
    InvariantViolation,
    NoCoprimeForm,
    NotCoprime,
    NotFree,
    RankUnproven,
    ZeroCode,
)
from .field import FpPoly, PrimeField, get_field, poly_gcd
from .linalg import FpBasis
from .ring import ModulusKind, RPoly, Sign, phi, to_rpoly
from .types import RPolyTypes

__all__ = [
    "Code",
    "NegacyclicCode",
    "CyclicCode",
    "PropertyReport",
    "SpanningSet",
    "ideal_closure",
    "module_closure",
    "from_generators",
    "fp_basis",
    "torsion_ideals",
    "verify_structure",
    "is_free",
    "free_generator",
    "coprime_form",
    "spanning_set",
    "rank",
    "free_rank",
    "reduced_generators",
    "cyclic_counterpart",
]

logger = logging.getLogger(__name__)

COEFFICIENT_NAMES = ("g11", "g12", "g13", "g22", "g23", "g33")

# Degree of g_ij is bounded by the torsion generator of the layer it sits in
DEGREE_BOUNDS = {"g11": 1, "g12": 2, "g13": 3, "g22": 2, "g23": 3, "g33": 3}


def _rotate(blocks: np.ndarray, k: int, wrap: int) -> np.ndarray:
    rolled = np.roll(blocks, k, axis=-1)
    if k and wrap != 1:
        rolled[..., :k] *= wrap
    return rolled


def _layer_multiples(vectors: np.ndarray, n: int) -> np.ndarray:
    """
    Rows m*f for m in (1, u, v, uv), as (rows, 4, n) blocks.
    """
    blocks = vectors.reshape(-1, 4, n)
    zero = np.zeros_like(blocks[:, 0])
    f0, f1, f2 = blocks[:, 0], blocks[:, 1], blocks[:, 2]
    return np.concatenate(
        [
            blocks,
            np.stack([zero, f0, zero, f2], axis=1),
            np.stack([zero, zero, f0, f1], axis=1),
            np.stack([zero, zero, zero, f0], axis=1),
        ]
    )


def _vectors(elements: Sequence[RPoly]) -> np.ndarray:
    return np.stack([element.to_vector() for element in elements])


def module_closure(
    elements: Sequence[RPoly], field: PrimeField, modulus: ModulusKind
) -> FpBasis:
    """
    The R-submodule spanned by the elements, without multiplying by x.
    """
    n = modulus.n
    if not elements:
        return FpBasis.span([], field, n)
    return FpBasis(_layer_multiples(_vectors(elements), n).reshape(-1, 4 * n), field, n)


def ideal_closure(
    generators: Sequence[RPoly], field: PrimeField, modulus: ModulusKind
) -> FpBasis:
    """
    The ideal generated in R[x]/(x^n -/+ 1), as the F_p-span of x^i*m*g.
    """
    n = modulus.n
    if not generators:
        return FpBasis.span([], field, n)
    layered = _layer_multiples(_vectors(generators), n)
    wrap = modulus.sign.value
    rows = np.concatenate([_rotate(layered, i, wrap) for i in range(n)])
    return FpBasis(rows.reshape(-1, 4 * n), field, n)


class PropertyReport:
    """
    Verdicts of the seven divisibility properties a canonical form satisfies.

    The diagonal terms s11, s22, s33 equal g11, g22, g33. The off-diagonal
    terms are kept scaled by h_i = (x^n -/+ 1)/g_i, under the keys h1*s12,
    h1*s13 and h2*s23.
    """

    NUMBERS = tuple(range(1, 8))

    def __init__(self) -> None:
        self.verdicts: Dict[int, bool] = {number: True for number in self.NUMBERS}
        self.witnesses: Dict[int, List[str]] = {number: [] for number in self.NUMBERS}
        self.s: Dict[str, FpPoly] = {}
        self.findings: List[str] = []

    def __bool__(self) -> bool:
        return all(self.verdicts.values())

    def __repr__(self) -> str:  # pragma: nocover
        failed = [number for number, ok in self.verdicts.items() if not ok]
        return f"<PropertyReport failed={failed}>"

    def record(
        self, number: int, divisor: FpPoly, dividend: FpPoly, label: str
    ) -> bool:
        ok = divisor.divides(dividend)
        if not ok:
            self.verdicts[number] = False
            self.witnesses[number].append(
                f"{divisor} does not divide {label} = {dividend}"
            )
        return ok

    def quotient(self, dividend: FpPoly, divisor: FpPoly, label: str) -> FpPoly:
        quotient, remainder = divmod(dividend, divisor)
        if remainder:
            self.findings.append(f"{label} leaves remainder {remainder}")
        return quotient

    def as_dict(self) -> Dict[str, Any]:
        return {
            "verdicts": {str(k): v for k, v in self.verdicts.items()},
            "witnesses": {str(k): v for k, v in self.witnesses.items() if v},
            "s": {name: str(poly) for name, poly in self.s.items()},
            "findings": list(self.findings),
        }


class SpanningSet(NamedTuple):
    elements: List[RPoly]
    rank: int
    free_rank: int


class Code(ABC):
    """
    An ideal of R[x]/(x^n -/+ 1) held in its unique canonical form

        A1 = g1 + u*g11 + v*g12 + uv*g13
        A2 = u*g2 + v*g22 + uv*g23
        A3 = v*g3 + uv*g33
        A4 = uv*g4

    where g4 | g2 | g1 | x^n -/+ 1, g4 | g3 | g1 and every g_ij is zero or of
    lower degree than g_(j+1). A zero torsion layer has g_i = x^n -/+ 1 and
    its A_i is absent.
    """

    sign: ClassVar[Sign]

    # Automatically register all the subclasses in this dict
    __registry: ClassVar[Dict[Sign, Type["Code"]]] = {}
    registry = MappingProxyType(__registry)

    field: PrimeField
    modulus: ModulusKind
    g1: FpPoly
    g2: FpPoly
    g3: FpPoly
    g4: FpPoly
    g11: FpPoly
    g12: FpPoly
    g13: FpPoly
    g22: FpPoly
    g23: FpPoly
    g33: FpPoly

    def __init_subclass__(cls) -> None:
        if not getattr(cls, "sign", None) or ABC in cls.__bases__:
            return

        if cls.sign in cls.__registry:
            raise TypeError(
                "Subclasses of Code must define a unique sign. "
                f"{cls.sign!r} is already defined as {cls.__registry[cls.sign]!r}"
            )

        cls.__registry[cls.sign] = cls

    def __init__(
        self,
        field: PrimeField,
        n: int,
        torsion: Sequence[FpPoly],
        coefficients: Optional[Dict[str, FpPoly]] = None,
        *,
        basis: Optional[FpBasis] = None,
    ) -> None:
        self.field = field
        self.modulus = ModulusKind(self.sign, n)
        self.g1, self.g2, self.g3, self.g4 = torsion

        coefficients = dict(coefficients or {})
        unknown = set(coefficients) - set(COEFFICIENT_NAMES)
        if unknown:
            raise ValueError(f"Unknown coefficient polynomials {sorted(unknown)}")
        for name in COEFFICIENT_NAMES:
            setattr(self, name, coefficients.get(name, field.zero))

        self._basis = basis
        self.check()

    @classmethod
    def from_generators(
        cls, generators: Iterable[RPolyTypes], field: PrimeField, n: int
    ) -> "Code":
        modulus = ModulusKind(cls.sign, n)
        elements = [to_rpoly(g, field, modulus) for g in generators]
        return cls.from_basis(ideal_closure(elements, field, modulus))

    @classmethod
    def from_basis(cls, basis: FpBasis) -> "Code":
        """
        Canonical form of the ideal spanned by an ideal-closed basis.

        The layer blocks of the echelon basis span the torsion ideals; the
        generators are lifted from the top layer down and each lower part is
        reduced by the generators already built.
        """
        field, n = basis.field, basis.n
        modulus = ModulusKind(cls.sign, n)
        N = modulus.polynomial(field)

        torsion = []
        for layer in range(4):
            g = N
            for row in basis.layer_span(layer):
                g = poly_gcd(g, field.poly(row.tolist()))
            torsion.append(g)
        logger.debug("Torsion of %r: %s", basis, ", ".join(map(str, torsion)))

        lifted: List[RPoly] = []
        for layer in (3, 2, 1, 0):
            g = torsion[layer]
            if g == N:
                lifted.insert(0, RPoly.zero(field, modulus))
                continue
            target = np.zeros((layer + 1) * n, dtype=np.int64)
            target[layer * n :] = g.padded(n)
            vector = basis.solve_prefix(target)
            if vector is None:
                raise InvariantViolation(
                    f"No codeword lifts layer {layer} generator {g}", witness=g
                )
            element = RPoly.from_vector(vector, field, modulus)
            for lower, generator in enumerate(lifted, start=layer + 1):
                element = _reduce(element, generator, lower, torsion[lower])
            lifted.insert(0, element)

        A1, A2, A3, _ = lifted
        coefficients = {
            "g11": A1.f1,
            "g12": A1.f2,
            "g13": A1.f3,
            "g22": A2.f2,
            "g23": A2.f3,
            "g33": A3.f3,
        }
        code = cls(field, n, torsion, coefficients, basis=basis)
        if basis.dim != code.expected_dim:
            raise InvariantViolation(
                f"Dimension {basis.dim} of {code!r} differs from {code.expected_dim}",
                witness=basis,
            )
        return code

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def N(self) -> FpPoly:
        return self.modulus.polynomial(self.field)

    @property
    def torsion(self) -> Tuple[FpPoly, FpPoly, FpPoly, FpPoly]:
        return self.g1, self.g2, self.g3, self.g4

    @property
    def coefficients(self) -> Dict[str, FpPoly]:
        return {name: getattr(self, name) for name in COEFFICIENT_NAMES}

    @property
    def degrees(self) -> Tuple[int, int, int, int]:
        r1, r2, r3, r4 = (g.degree or 0 for g in self.torsion)
        return r1, r2, r3, r4

    @property
    def r1(self) -> int:
        return self.degrees[0]

    @property
    def r2(self) -> int:
        return self.degrees[1]

    @property
    def r3(self) -> int:
        return self.degrees[2]

    @property
    def r4(self) -> int:
        return self.degrees[3]

    @property
    def r_prime(self) -> int:
        return min(self.r2, self.r3)

    @property
    def present(self) -> Tuple[bool, bool, bool, bool]:
        N = self.N
        a, b, c, d = (g != N for g in self.torsion)
        return a, b, c, d

    @property
    def is_zero(self) -> bool:
        return not any(self.present)

    @property
    def expected_dim(self) -> int:
        return sum(self.n - r for r in self.degrees)

    @property
    def generators(self) -> Tuple[RPoly, RPoly, RPoly, RPoly]:
        """
        A1 .. A4, the zero polynomial standing in for an absent generator.
        """
        modulus, zero = self.modulus, self.field.zero
        absent = RPoly.zero(self.field, modulus)
        parts = (
            (self.g1, self.g11, self.g12, self.g13),
            (zero, self.g2, self.g22, self.g23),
            (zero, zero, self.g3, self.g33),
            (zero, zero, zero, self.g4),
        )
        A1, A2, A3, A4 = (
            RPoly(*components, modulus=modulus) if present else absent
            for components, present in zip(parts, self.present)
        )
        return A1, A2, A3, A4

    @property
    def basis(self) -> FpBasis:
        if self._basis is None:
            self._basis = ideal_closure(
                [A for A in self.generators if A], self.field, self.modulus
            )
        return self._basis

    @property
    def dim(self) -> int:
        return self.basis.dim

    def key(self) -> Tuple:
        return (
            self.degrees,
            tuple(g.sort_key() for g in self.torsion),
            tuple(getattr(self, name).sort_key() for name in COEFFICIENT_NAMES),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Code):
            return NotImplemented
        return (
            self.field == other.field
            and self.modulus == other.modulus
            and self.torsion == other.torsion
            and self.coefficients == other.coefficients
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.modulus, self.key()))

    def __repr__(self) -> str:
        generators = ", ".join(str(A) for A in self.generators if A) or "0"
        return f"<{self.__class__.__name__} <{generators}> mod {self.modulus!r}>"

    def check(self) -> None:
        """
        Raises InvariantViolation unless the divisor chains and the degree
        bounds of a canonical form hold.
        """
        N = self.N
        for g in self.torsion:
            if g.field != self.field or not g.is_monic:
                raise InvariantViolation(f"{g} is not a monic divisor", witness=g)

        chains = (
            (self.g1, N, "g1 | x^n"),
            (self.g2, self.g1, "g2 | g1"),
            (self.g3, self.g1, "g3 | g1"),
            (self.g4, self.g2, "g4 | g2"),
            (self.g4, self.g3, "g4 | g3"),
        )
        for divisor, dividend, label in chains:
            if not divisor.divides(dividend):
                raise InvariantViolation(
                    f"Chain {label} fails", witness=(divisor, dividend)
                )

        for name, layer in DEGREE_BOUNDS.items():
            coefficient = getattr(self, name)
            bound = self.torsion[layer]
            if coefficient and coefficient.degree >= bound.degree:  # type: ignore
                raise InvariantViolation(
                    f"deg {name} = {coefficient.degree} is not below deg {bound}",
                    witness=coefficient,
                )

    def verify_structure(self) -> PropertyReport:
        """
        Checks the divisibility properties tying the g_i and g_ij together.
        """
        report = PropertyReport()
        N = self.N
        g1, g2, g3, g4 = self.torsion
        g11, g12, g13, g22, g23, g33 = self.coefficients.values()

        # (1) divisor chains
        report.record(1, g1, N, "x^n -/+ 1")
        report.record(1, g2, g1, "g1")
        report.record(1, g3, g1, "g1")
        report.record(1, g4, g2, "g2")
        report.record(1, g4, g3, "g3")

        h1 = report.quotient(N, g1, "(x^n -/+ 1)/g1")
        h2 = report.quotient(N, g2, "(x^n -/+ 1)/g2")
        h3 = report.quotient(N, g3, "(x^n -/+ 1)/g3")
        g1_g2 = report.quotient(g1, g2, "g1/g2")
        g1_g3 = report.quotient(g1, g3, "g1/g3")

        # (2)
        s11, s22, s33 = h1 * g11, h2 * g22, h3 * g33
        report.record(2, g2, s11, "(x^n -/+ 1)/g1 * g11")
        report.record(2, g3, s22, "(x^n -/+ 1)/g2 * g22")
        report.record(2, g4, s33, "(x^n -/+ 1)/g3 * g33")

        # (3), (4), (5)
        report.record(3, g3, g1_g2 * g22, "g1/g2 * g22")
        report.record(4, g4, g22, "g22")
        report.record(5, g4, g11 - g1_g3 * g33, "g11 - g1/g3 * g33")

        # (6)
        g1_g2g3 = report.quotient(g1_g2 * g22, g3, "g1/(g2 g3) * g22")
        report.record(
            6,
            g4,
            g12 - g1_g2 * g23 + g1_g2g3 * g33,
            "g12 - g1/g2 * g23 + g1/(g2 g3) * g22 * g33",
        )

        # (7)
        q11 = report.quotient(s11, g2, "s11/g2")
        s12 = h1 * g12 - q11 * g22
        report.record(7, g3, s12, "s12")
        q12 = report.quotient(s12, g3, "s12/g3")
        s13 = h1 * g13 - q11 * g23 - q12 * g33
        report.record(7, g4, s13, "s13")
        q22 = report.quotient(s22, g3, "s22/g3")
        s23 = h2 * g23 - q22 * g33
        report.record(7, g4, s23, "s23")

        report.s = {
            "s11": g11,
            "s22": g22,
            "s33": g33,
            "h1*s12": s12,
            "h1*s13": s13,
            "h2*s23": s23,
        }
        for finding in report.findings:
            logger.info("%r: %s", self, finding)
        return report

    def is_free(self) -> bool:
        return self.g1 == self.g4

    def free_generator(self) -> RPoly:
        if not self.is_free():
            raise NotFree(f"{self!r} is not free: g1 = {self.g1}, g4 = {self.g4}")
        if self.is_zero:
            raise ZeroCode("The zero code has no generator")
        return self.generators[0]

    def coprime_form(self) -> Tuple[RPoly, RPoly]:
        """
        Two generators g1 + u*g2 + uv*g13 and v*g3 + uv*g4 of the code.

        For lengths coprime to p these exist unless some component of the code
        under the Chinese remainder splitting is <u + av>; that case raises
        NoCoprimeForm with the element that could not be realized.
        """
        if gcd(self.n, self.p) != 1:
            raise NotCoprime(self.p, self.n)

        field, modulus, n = self.field, self.modulus, self.n
        g1, g2, g3, g4 = (g % self.N for g in self.torsion)
        target = np.array(g1.padded(n) + g2.padded(n) + (0,) * n, dtype=np.int64)
        vector = self.basis.solve_prefix(target)
        if vector is None:
            wanted = RPoly(g1, g2, modulus=modulus)
            raise NoCoprimeForm(
                f"{self!r} has no element with the parts of {wanted}", witness=wanted
            )

        first = _reduce(
            RPoly.from_vector(vector, field, modulus), self.generators[3], 3, self.g4
        )
        second = RPoly(field.zero, field.zero, g3, g4, modulus=modulus)

        closure = ideal_closure([first, second], field, modulus)
        if closure != self.basis:
            missing = next(r for r in self.basis.matrix if not closure.contains(r))
            witness = RPoly.from_vector(missing, field, modulus)
            raise NoCoprimeForm(
                f"<{first}, {second}> misses {witness} of {self!r}", witness=witness
            )
        return first, second

    def spanning_set(self) -> SpanningSet:
        """
        x^i A1 for i < n - r1, x^i A2 and x^i A3 for i < r1 - r2 and
        i < r1 - r3, and x^i A4 for i < min(r2, r3) - r4.
        """
        counts = (
            self.n - self.r1,
            self.r1 - self.r2,
            self.r1 - self.r3,
            self.r_prime - self.r4,
        )
        elements = [
            A.shift(i)
            for A, count in zip(self.generators, counts)
            for i in range(count)
        ]
        size = self.n + self.r1 + self.r_prime - self.r2 - self.r3 - self.r4
        if len(elements) != size:
            raise InvariantViolation(
                f"Spanning set of {self!r} has {len(elements)} elements"
            )
        return SpanningSet(elements, size, self.n - self.r1)

    @property
    def rank_proven(self) -> bool:
        """
        Whether the rank formula is established for this length, which needs
        p to divide n.
        """
        return gcd(self.n, self.p) != 1

    def rank(self) -> int:
        if not self.rank_proven:
            warnings.warn(
                f"Rank formula is only established for lengths divisible by {self.p}",
                RankUnproven,
            )
        return self.spanning_set().rank

    def free_rank(self) -> int:
        return self.n - self.r1

    def reduced_generators(self) -> List[RPoly]:
        """
        The present generators minus those already implied by the others:
        A2 = u*A1 + (uv terms) when g2 = g1, A3 = v*A1 + (uv terms) when
        g3 = g1, and A4 = v*A2 or u*A3 when g4 equals g2 or g3.
        """
        A1, A2, A3, A4 = self.generators
        present = list(self.present)
        if present[0] and self.g2 == self.g1:
            present[1] = False
        if present[0] and self.g3 == self.g1:
            present[2] = False
        if self.g4 == self.g2 or self.g4 == self.g3:
            present[3] = False
        return [A for A, keep in zip((A1, A2, A3, A4), present) if keep]

    def counterpart(self) -> "Code":
        """
        The code of the opposite sign mapped onto this one by x -> -x.
        """
        cls = self.registry[self.sign.opposite]
        images = [phi(A) for A in self.generators if A]
        return cls.from_generators(images, self.field, self.n)

    def report(self) -> Dict[str, Any]:
        r1, r2, r3, r4 = self.degrees
        report: Dict[str, Any] = {"p": self.p, "n": self.n}
        report.update({f"g{i}": str(g) for i, g in enumerate(self.torsion, start=1)})
        report.update({name: str(getattr(self, name)) for name in COEFFICIENT_NAMES})
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RankUnproven)
            rank = self.rank()
        report.update(
            {
                "r1": r1,
                "r2": r2,
                "r3": r3,
                "r4": r4,
                "rank": rank,
                "rank_proven": self.rank_proven,
                "free_rank": self.free_rank(),
                "is_free": self.is_free(),
                "dim_fp": self.dim,
            }
        )
        return report


class NegacyclicCode(Code):
    sign = Sign.NEGACYCLIC


class CyclicCode(Code):
    sign = Sign.CYCLIC


def _reduce(element: RPoly, generator: RPoly, layer: int, g: FpPoly) -> RPoly:
    """
    Replaces the given layer of element by its remainder modulo g, using a
    generator whose lowest nonzero layer is g.
    """
    if not generator:
        return element
    quotient = element.parts[layer] // g
    if quotient.is_zero:
        return element
    return element - generator * quotient


def _field(p: Union[int, PrimeField]) -> PrimeField:
    return p if isinstance(p, PrimeField) else get_field(p)


def from_generators(
    generators: Iterable[RPolyTypes],
    p: Union[int, PrimeField],
    n: int,
    sign: Sign = Sign.NEGACYCLIC,
) -> Code:
    return Code.registry[sign].from_generators(generators, _field(p), n)


def fp_basis(code: Code) -> FpBasis:
    return code.basis


def torsion_ideals(code: Code) -> Tuple[FpPoly, FpPoly, FpPoly, FpPoly]:
    return code.torsion


def verify_structure(code: Code) -> PropertyReport:
    return code.verify_structure()


def is_free(code: Code) -> bool:
    return code.is_free()


def free_generator(code: Code) -> RPoly:
    return code.free_generator()


def coprime_form(code: Code) -> Tuple[RPoly, RPoly]:
    return code.coprime_form()


def spanning_set(code: Code) -> SpanningSet:
    return code.spanning_set()


def rank(code: Code) -> int:
    return code.rank()


def free_rank(code: Code) -> int:
    return code.free_rank()


def reduced_generators(code: Code) -> List[RPoly]:
    return code.reduced_generators()


def cyclic_counterpart(code: NegacyclicCode) -> List[RPoly]:
    """
    Generators of the cyclic code A with phi(A) = code.
    """
    return code.counterpart().reduced_generators()
