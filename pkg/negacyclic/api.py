from math import gcd
from typing import Any, Dict, Iterable, List, Sequence, Tuple

from .catalog import (
    CatalogEntry,
    TableVerdict,
    catalog_codes,
    reproduce_tables,
    verify_suite,
)
from .codes import Code, from_generators
from .config import Settings
from .distance import DistanceReport, distance_report
from .errors import NoCoprimeForm
from .ring import Sign
from .types import RPolyTypes

settings = Settings()


def configure(**overrides: Any) -> Settings:
    global settings
    settings = settings(**overrides)
    return settings


def code(
    generators: Iterable[RPolyTypes], p: int, n: int, sign: Sign = Sign.NEGACYCLIC
) -> Code:
    return from_generators(generators, p, n, sign)


def analysis_report(
    c: Code, settings: Settings, methods: Sequence[str] = ("oracle", "formula")
) -> Dict[str, Any]:
    """
    Canonical form, structure verdicts, rank, spanning set and distances of
    a code.
    """
    report = c.report()
    report["generators"] = [str(A) for A in c.generators if A]
    report["reduced_generators"] = [str(A) for A in c.reduced_generators()]
    report["properties"] = c.verify_structure().as_dict()
    report["spanning_set"] = [str(f) for f in c.spanning_set().elements]

    if gcd(c.n, c.p) == 1 and not c.is_zero:
        try:
            report["coprime_form"] = [str(f) for f in c.coprime_form()]
        except NoCoprimeForm as e:
            report["coprime_form"] = f"none: {e}"

    distance = distance_report(c, methods=methods, **settings.distance_budgets)
    report["distance"] = distance.as_dict()
    return report


def analyze(
    generators: Iterable[RPolyTypes],
    p: int,
    n: int,
    *,
    sign: Sign = Sign.NEGACYCLIC,
    methods: Sequence[str] = ("oracle", "formula"),
) -> Dict[str, Any]:
    global settings
    return analysis_report(code(generators, p, n, sign), settings, methods)


def distance(
    generators: Iterable[RPolyTypes],
    p: int,
    n: int,
    *,
    methods: Sequence[str] = ("oracle", "formula"),
) -> DistanceReport:
    global settings
    return distance_report(
        code(generators, p, n), methods=methods, **settings.distance_budgets
    )


def catalog(p: int, n: int, family: str = "all") -> List[CatalogEntry]:
    global settings
    return catalog_codes(p, n, family, settings)


def tables(p: int = 5, which: Sequence[int] = (1, 2, 3)) -> List[TableVerdict]:
    global settings
    return reproduce_tables(p, settings, which)


def verify(p: int, n: int, count: int = 20) -> Dict[str, Tuple[int, int]]:
    global settings
    return verify_suite(p, n, count, settings)
