"""
Catalogs of negacyclic codes for small p and n, and the check of the printed
tables for p = 5, n = 5.
"""
import csv
import json
import logging
import warnings
from abc import ABC, abstractmethod
from itertools import product
from types import MappingProxyType
from typing import (
    IO,
    Any,
    ClassVar,
    Dict,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Type,
)

import numpy as np

from . import tables
from .codes import Code, NegacyclicCode, module_closure
from .config import Settings
from .distance import DistanceReport, EnumOracle, SupportOracle, distance_report
from .errors import InvariantViolation, NotApplicable, RankUnproven
from .field import FpPoly, PrimeField, get_field, monic_divisors
from .ring import ModulusKind, RPoly

__all__ = [
    "Skeleton",
    "CatalogEntry",
    "TableVerdict",
    "Family",
    "COLUMNS",
    "enumerate_skeletons",
    "coefficient_choices",
    "catalog_codes",
    "catalog_entry",
    "reproduce_tables",
    "row_agreement",
    "verify_suite",
    "write_json",
    "write_csv",
]

logger = logging.getLogger(__name__)

COLUMNS = (
    "p",
    "n",
    "t1",
    "t2",
    "t3",
    "t4",
    "g11",
    "g12",
    "g13",
    "g22",
    "g23",
    "g33",
    "rank",
    "rank_proven",
    "free_rank",
    "dim_fp",
    "is_free",
    "d_oracle",
    "d_formula",
    "hypothesis_met",
    "source",
)

# Codes with at most this many codewords get both distance oracles compared
ORACLE_CROSS_CHECK = 10 ** 4


def _is_p_power(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def divisors(field: PrimeField, n: int, budget: int = 10 ** 6) -> List[FpPoly]:
    """
    Monic divisors of x^n + 1, in increasing degree.

    For n a power of p (n = 1 included) these are the powers of x + 1 and no
    search is needed.
    """
    modulus = ModulusKind.negacyclic(n)
    if _is_p_power(n, field.p):
        g = field.poly((1, 1))
        return [g ** t for t in range(n + 1)]
    return monic_divisors(modulus.polynomial(field), budget)


class Skeleton(NamedTuple):
    """
    Torsion generators g1, g2, g3, g4 with g4 | g2 | g1 | x^n + 1 and
    g4 | g3 | g1. An absent layer holds x^n + 1 itself.
    """

    g1: FpPoly
    g2: FpPoly
    g3: FpPoly
    g4: FpPoly

    @property
    def degrees(self) -> Tuple[int, int, int, int]:
        t1, t2, t3, t4 = (g.degree or 0 for g in self)
        return t1, t2, t3, t4

    def key(self) -> Tuple:
        return self.degrees, tuple(g.sort_key() for g in self)

    def __str__(self) -> str:
        return "({}, {}, {}, {})".format(*self.degrees)


def enumerate_skeletons(p: int, n: int, budget: int = 10 ** 6) -> List[Skeleton]:
    field = get_field(p)
    candidates = divisors(field, n, budget)
    skeletons = [
        Skeleton(g1, g2, g3, g4)
        for g1 in candidates
        for g2 in candidates
        if g2.divides(g1)
        for g3 in candidates
        if g3.divides(g1)
        for g4 in candidates
        if g4.divides(g2) and g4.divides(g3)
    ]
    return sorted(skeletons, key=Skeleton.key)


def _random_poly(field: PrimeField, size: int, rng: np.random.Generator) -> FpPoly:
    return field.poly(rng.integers(0, field.p, size=size).tolist())


def coefficient_choices(
    field: PrimeField,
    bounds: Sequence[int],
    settings: Settings,
    rng: np.random.Generator,
) -> Iterator[Tuple[FpPoly, ...]]:
    """
    One polynomial per slot, slot i of degree below bounds[i].

    All choices are walked when there are at most coefficient_budget of them,
    otherwise the all-zero choice and settings.samples uniform draws.
    """
    total = 1
    for bound in bounds:
        total *= field.p ** bound

    if total <= settings.coefficient_budget:
        slots = [
            [field.poly(c) for c in product(range(field.p), repeat=bound)]
            for bound in bounds
        ]
        yield from product(*slots)
        return

    yield tuple(field.zero for _ in bounds)
    for _ in range(settings.samples):
        yield tuple(_random_poly(field, bound, rng) for bound in bounds)


class CatalogEntry(NamedTuple):
    code: Code
    rank: int
    free_rank: int
    distance: DistanceReport
    source: str

    def as_dict(self) -> Dict[str, Any]:
        code = self.code
        t1, t2, t3, t4 = code.degrees
        distance = self.distance.as_dict()
        row: Dict[str, Any] = {"p": code.p, "n": code.n}
        row.update({"t1": t1, "t2": t2, "t3": t3, "t4": t4})
        row.update({name: str(poly) for name, poly in code.coefficients.items()})
        row.update(
            {
                "rank": self.rank,
                "rank_proven": code.rank_proven,
                "free_rank": self.free_rank,
                "dim_fp": code.dim,
                "is_free": code.is_free(),
                "d_oracle": distance["d_oracle"],
                "d_formula": distance["d_formula"],
                "hypothesis_met": distance["hypothesis_met"],
                "source": self.source,
            }
        )
        return row


def catalog_entry(code: Code, settings: Settings, source: str) -> CatalogEntry:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RankUnproven)
        rank = code.rank()
    distance = distance_report(code, **settings.distance_budgets)
    return CatalogEntry(code, rank, code.free_rank(), distance, source)


class Family(ABC):
    """
    A source of generator presentations, filtered by admits().
    """

    name: ClassVar[str]

    # Automatically register all the subclasses in this dict
    __registry: ClassVar[Dict[str, Type["Family"]]] = {}
    registry = MappingProxyType(__registry)

    def __init_subclass__(cls) -> None:
        if not getattr(cls, "name", None) or ABC in cls.__bases__:
            return

        if cls.name in cls.__registry:
            raise TypeError(
                "Subclasses of Family must define a unique name. "
                f"{cls.name!r} is already defined as {cls.__registry[cls.name]!r}"
            )

        cls.__registry[cls.name] = cls

    def __init__(
        self,
        field: PrimeField,
        n: int,
        settings: Settings,
        rng: np.random.Generator,
    ) -> None:
        self.field = field
        self.modulus = ModulusKind.negacyclic(n)
        self.settings = settings
        self.rng = rng

    @property
    def n(self) -> int:
        return self.modulus.n

    @property
    def N(self) -> FpPoly:
        return self.modulus.polynomial(self.field)

    def divisors(self) -> List[FpPoly]:
        return divisors(self.field, self.n, self.settings.divisor_budget)

    def choices(self, bounds: Sequence[int]) -> Iterator[Tuple[FpPoly, ...]]:
        return coefficient_choices(self.field, bounds, self.settings, self.rng)

    def element(self, *parts: FpPoly) -> RPoly:
        return RPoly(*parts, modulus=self.modulus)

    @abstractmethod
    def presentations(self) -> Iterator[List[RPoly]]:
        ...  # pragma: nocover

    def admits(self, code: Code) -> bool:
        return not code.is_zero


class FreeFamily(Family):
    name = "free"

    def presentations(self) -> Iterator[List[RPoly]]:
        for g in self.divisors():
            if g == self.N:
                continue
            t = g.degree or 0
            for g11, g12, g13 in self.choices((t, t, t)):
                yield [self.element(g, g11, g12, g13)]

    def admits(self, code: Code) -> bool:
        return super().admits(code) and code.is_free()


class SingleNonfreeFamily(Family):
    """
    One generator led by u, v or uv times a divisor of x^n + 1.
    """

    name = "single-nonfree"

    def presentations(self) -> Iterator[List[RPoly]]:
        zero = self.field.zero
        for layer in (1, 2, 3):
            for g in self.divisors():
                if g == self.N:
                    continue
                for lower in self.choices((self.n,) * (3 - layer)):
                    yield [self.element(*((zero,) * layer + (g,) + lower))]

    def admits(self, code: Code) -> bool:
        return (
            super().admits(code)
            and not code.present[0]
            and len(code.reduced_generators()) == 1
        )


class UvOnlyFamily(Family):
    name = "uv-only"

    def presentations(self) -> Iterator[List[RPoly]]:
        zero, one = self.field.zero, self.field.one
        for g in self.divisors():
            if g not in (one, self.N):
                yield [self.element(zero, zero, zero, g)]


class AllFamily(Family):
    """
    Every skeleton with its g_ij drawn below the canonical degree bounds.
    """

    name = "all"

    def presentations(self) -> Iterator[List[RPoly]]:
        zero, N = self.field.zero, self.N
        budget = self.settings.divisor_budget
        for skeleton in enumerate_skeletons(self.field.p, self.n, budget):
            g1, g2, g3, g4 = skeleton
            _, t2, t3, t4 = skeleton.degrees
            has1, has2, has3, has4 = (g != N for g in skeleton)
            if not (has1 or has2 or has3 or has4):
                continue

            bounds = (
                (t2, t3, t4) if has1 else (0, 0, 0),
                (t3, t4) if has2 else (0, 0),
                (t4,) if has3 else (0,),
            )
            flat = [bound for group in bounds for bound in group]
            for g11, g12, g13, g22, g23, g33 in self.choices(flat):
                generators = []
                if has1:
                    generators.append(self.element(g1, g11, g12, g13))
                if has2:
                    generators.append(self.element(zero, g2, g22, g23))
                if has3:
                    generators.append(self.element(zero, zero, g3, g33))
                if has4:
                    generators.append(self.element(zero, zero, zero, g4))
                yield generators


def catalog_codes(
    p: int, n: int, family: str = "all", settings: Optional[Settings] = None
) -> List[CatalogEntry]:
    """
    Distinct codes of a family, sorted by skeleton then canonical form.
    """
    settings = settings or Settings()
    try:
        family_cls = Family.registry[family]
    except KeyError:
        raise ValueError(
            f"Unknown family {family!r}, expected one of {sorted(Family.registry)}"
        )

    field = get_field(p)
    source = family_cls(field, n, settings, np.random.default_rng(settings.seed))
    codes: Dict[Code, None] = {}
    for generators in source.presentations():
        code = NegacyclicCode.from_generators(generators, field, n)
        if code in codes or not source.admits(code):
            continue
        report = code.verify_structure()
        if not report:
            raise InvariantViolation(
                f"{code!r} breaks properties {report!r}", witness=report
            )
        codes[code] = None

    logger.info("Family %r over F_%d, n = %d: %d codes", family, p, n, len(codes))
    return [
        catalog_entry(code, settings, "enumerated")
        for code in sorted(codes, key=Code.key)
    ]


class TableVerdict(NamedTuple):
    table: int
    row: int
    label: str
    expected_rank: int
    got_rank: List[int]
    expected_d: int
    got_d: List[Optional[int]]
    details: List[str]
    entries: List[CatalogEntry]

    @property
    def verdict(self) -> str:
        if not self.details:
            return "match"
        return "mismatch({})".format("; ".join(self.details))

    def as_dict(self) -> Dict[str, Any]:
        def single(values: List[Any]) -> Any:
            return values[0] if len(values) == 1 else values

        return {
            "table": self.table,
            "row": self.row,
            "label": self.label,
            "expected_rank": self.expected_rank,
            "got_rank": single(self.got_rank),
            "expected_d": self.expected_d,
            "got_d": single(self.got_d),
            "verdict": self.verdict,
        }


def _row_choices(
    row: tables.TableRow, samples: int, rng: np.random.Generator
) -> List[Tuple[int, ...]]:
    """
    All-zero and all-one coefficients, then seeded draws, each honouring the
    side condition of the row.
    """
    k = row.coefficients
    if not k:
        return [()]

    choices = [c for c in ((0,) * k, (1,) * k) if row.admits(c)]
    drawn = 0
    for _ in range(100 * samples):
        if drawn == samples:
            break
        c = tuple(int(value) for value in rng.integers(0, tables.P, size=k))
        if row.admits(c):
            drawn += 1
            if c not in choices:
                choices.append(c)
    return choices


def reproduce_tables(
    p: int = tables.P,
    settings: Optional[Settings] = None,
    which: Sequence[int] = (1, 2, 3),
) -> List[TableVerdict]:
    """
    Instantiates every printed row and compares rank and oracle distance with
    the printed columns. Mismatches are findings, not errors.
    """
    if p != tables.P:
        raise NotApplicable(f"Tables are printed for p = {tables.P}, got p = {p}")

    settings = settings or Settings()
    field = get_field(p)
    x = field.x
    g = x + 1
    rng = np.random.default_rng(settings.seed)

    verdicts = []
    for row in tables.rows(*which):
        ranks: List[int] = []
        distances: List[Optional[int]] = []
        details: List[str] = []
        entries: Dict[Code, CatalogEntry] = {}
        for c in _row_choices(row, settings.samples, rng):
            code = NegacyclicCode.from_generators(row.build(g, x, c), field, tables.N)
            entry = entries.get(code)
            if entry is None:
                entry = catalog_entry(code, settings, f"table{row.table}:{row.row}")
                entries[code] = entry

            d = entry.distance.d_oracle
            if entry.rank not in ranks:
                ranks.append(entry.rank)
            if d not in distances:
                distances.append(d)
            if entry.rank != row.rank:
                details.append(f"c={c}: rank {entry.rank} != {row.rank}")
            if d is not None and d != row.distance:
                details.append(
                    f"c={c}: d {d} != {row.distance}, witness {entry.distance.witness}"
                )

        verdict = TableVerdict(
            row.table,
            row.row,
            row.label,
            row.rank,
            sorted(ranks),
            row.distance,
            distances,
            details,
            list(entries.values()),
        )
        if details:
            logger.warning(
                "Table %d row %d %s: %s", row.table, row.row, row.label, verdict.verdict
            )
        verdicts.append(verdict)
    return verdicts


def row_agreement(verdicts: Sequence[TableVerdict]) -> float:
    if not verdicts:
        return 1.0
    return sum(not v.details for v in verdicts) / len(verdicts)


def _random_generator(
    field: PrimeField,
    modulus: ModulusKind,
    candidates: Sequence[FpPoly],
    rng: np.random.Generator,
) -> RPoly:
    parts = []
    for _ in range(4):
        if rng.integers(0, 2):
            parts.append(field.zero)
        else:
            g = candidates[int(rng.integers(0, len(candidates)))]
            parts.append(g * _random_poly(field, modulus.n, rng))
    return RPoly(*parts, modulus=modulus)


def _random_unit(
    field: PrimeField, modulus: ModulusKind, rng: np.random.Generator
) -> RPoly:
    c = field.poly((int(rng.integers(1, field.p)),))
    nilpotent = (_random_poly(field, modulus.n, rng) for _ in range(3))
    return RPoly(c, *nilpotent, modulus=modulus)


VERIFY_CHECKS = (
    "generators_in_code",
    *(f"property_{number}" for number in range(1, 8)),
    "canonical_idempotent",
    "presentation_invariant",
    "spanning_set",
    "reduced_generators",
    "counterpart_involution",
    "oracles_agree",
)


def verify_suite(
    p: int, n: int, count: int = 20, settings: Optional[Settings] = None
) -> Dict[str, Tuple[int, int]]:
    """
    Runs the invariant checks on count seeded random codes and returns
    (passed, checked) per check. Checks that do not apply to a code are not
    counted for it.
    """
    settings = settings or Settings()
    field = get_field(p)
    modulus = ModulusKind.negacyclic(n)
    candidates = divisors(field, n, settings.divisor_budget)
    rng = np.random.default_rng(settings.seed)
    tally = {name: [0, 0] for name in VERIFY_CHECKS}

    def tick(name: str, ok: bool) -> None:
        tally[name][0] += bool(ok)
        tally[name][1] += 1
        if not ok:
            logger.warning("Check %s failed on %r", name, code)

    for _ in range(count):
        generators = [
            _random_generator(field, modulus, candidates, rng)
            for _ in range(int(rng.integers(1, 4)))
        ]
        code = NegacyclicCode.from_generators(generators, field, n)

        tick(
            "generators_in_code",
            all(code.basis.contains(A.to_vector()) for A in generators),
        )
        report = code.verify_structure()
        for number, ok in report.verdicts.items():
            tick(f"property_{number}", ok)

        present = [A for A in code.generators if A]
        again = NegacyclicCode.from_generators(present, field, n)
        tick("canonical_idempotent", again == code)

        if code.is_zero:
            continue

        scaled = [_random_unit(field, modulus, rng) * A for A in present]
        if len(scaled) > 1:
            scaled[0] = scaled[0] + scaled[-1] * _random_poly(field, n, rng)
        other = NegacyclicCode.from_generators(scaled, field, n)
        tick("presentation_invariant", other == code)

        if n % p == 0:
            elements = code.spanning_set().elements
            tick("spanning_set", module_closure(elements, field, modulus) == code.basis)

        reduced = NegacyclicCode.from_generators(code.reduced_generators(), field, n)
        tick("reduced_generators", reduced == code)
        tick("counterpart_involution", code.counterpart().counterpart() == code)

        if p ** code.dim <= ORACLE_CROSS_CHECK:
            support = SupportOracle(settings.support_budget)(code).distance
            enum = EnumOracle(settings.enum_budget)(code).distance
            tick("oracles_agree", support == enum)

    return {name: (passed, checked) for name, (passed, checked) in tally.items()}


def write_json(
    records: Sequence[Dict[str, Any]], stream: IO[str], header: Dict[str, Any]
) -> None:
    json.dump({"header": header, "entries": list(records)}, stream, indent=2)
    stream.write("\n")


def write_csv(
    records: Sequence[Dict[str, Any]], stream: IO[str], header: Dict[str, Any]
) -> None:
    stream.write("# {}\n".format(" ".join(f"{k}={v}" for k, v in header.items())))
    writer = csv.DictWriter(stream, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(records)
