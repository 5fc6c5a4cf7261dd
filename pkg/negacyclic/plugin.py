from typing import Any

import pytest

from . import api
from .codes import Code, NegacyclicCode
from .config import Settings
from .distance import DistanceReport, distance_report
from .field import FpPoly, get_field
from .parsing import parse_poly
from .ring import ModulusKind, RPoly, to_rpoly
from .types import RPolyTypes


class CodeContext:
    """
    A field and a negacyclic modulus with shortcuts for building elements and
    codes in tests.
    """

    def __init__(self, p: int, n: int, settings: Settings) -> None:
        self.field = get_field(p)
        self.modulus = ModulusKind.negacyclic(n)
        self.settings = settings

    def __repr__(self) -> str:  # pragma: nocover
        return f"<CodeContext F_{self.p} {self.modulus!r}>"

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def n(self) -> int:
        return self.modulus.n

    def poly(self, text: str) -> FpPoly:
        return parse_poly(text, self.field)

    def element(self, value: RPolyTypes) -> RPoly:
        return to_rpoly(value, self.field, self.modulus)

    def code(self, *generators: RPolyTypes) -> Code:
        return NegacyclicCode.from_generators(generators, self.field, self.n)

    def distance(self, code: Code) -> DistanceReport:
        return distance_report(code, **self.settings.distance_budgets)


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "negacyclic(p=3, n=3, support_budget=..., enum_budget=..., seed=...): "
        "configure the code_context fixture.",
    )


@pytest.fixture
def code_context(request):
    marker = request.node.get_closest_marker("negacyclic")
    kwargs: Any = dict(marker.kwargs) if marker else {}
    p = kwargs.pop("p", 3)
    n = kwargs.pop("n", 3)
    yield CodeContext(p, n, api.settings(**kwargs))
