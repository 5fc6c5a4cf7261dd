import pytest

import negacyclic
from negacyclic import api
from negacyclic.codes import CyclicCode, NegacyclicCode
from negacyclic.config import Settings
from negacyclic.distance import DistanceReport
from negacyclic.errors import NotApplicable
from negacyclic.ring import Sign


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    monkeypatch.setattr(api, "settings", Settings())


def test_configure():
    configured = negacyclic.configure(enum_budget=100, seed=3)
    assert configured is api.settings
    assert configured.enum_budget == 100
    assert configured.seed == 3
    assert configured.support_budget == Settings().support_budget

    again = negacyclic.configure(samples=0)
    assert again.enum_budget == 100
    assert again.samples == 0

    with pytest.raises(ValueError):
        negacyclic.configure(enum_budget=0)
    assert api.settings is again


def test_code():
    code = negacyclic.code(["0;1", "0;0;1"], 5, 5)
    assert isinstance(code, NegacyclicCode)
    assert code.rank() == 10
    assert isinstance(negacyclic.code(["x+1"], 5, 5, Sign.CYCLIC), CyclicCode)


def test_analyze():
    report = negacyclic.analyze(["0;0;0;(x+1)^4"], 3, 9)
    assert report["rank"] == report["dim_fp"] == 5
    assert report["is_free"] is False
    assert report["distance"]["d_oracle"] == 3
    assert report["distance"]["d_formula"] == 4
    assert "coprime_form" not in report
    assert all(report["properties"]["verdicts"].values())


def test_analyze_formula_only():
    report = negacyclic.analyze(["0;0;0;(x+1)^2"], 5, 5, methods=("formula",))
    assert report["distance"]["d_oracle"] == "not-run"
    assert report["distance"]["d_formula"] == 3


def test_distance_uses_configured_budgets():
    report = api.distance(["0;0;0;(x+1)^4"], 5, 5)
    assert isinstance(report, DistanceReport)
    assert report.d_oracle == 5

    negacyclic.configure(support_budget=1, enum_budget=1)
    report = api.distance(["0;0;0;(x+1)^4"], 5, 5)
    assert report.as_dict()["d_oracle"] == "skipped(budget)"


def test_catalog():
    entries = api.catalog(3, 9, "uv-only")
    assert [entry.code.degrees[3] for entry in entries] == list(range(1, 9))


def test_tables():
    negacyclic.configure(samples=1)
    verdicts = api.tables(which=(1,))
    assert [v.verdict for v in verdicts] == ["match"] * 5
    with pytest.raises(NotApplicable):
        api.tables(p=3)


def test_verify():
    results = negacyclic.verify(3, 3, count=4)
    assert results["generators_in_code"] == (4, 4)
    assert all(passed == checked for passed, checked in results.values())
