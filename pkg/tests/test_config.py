import pytest

from negacyclic.config import Settings


def test_defaults():
    settings = Settings()
    assert settings.as_dict() == {
        "support_budget": 10 ** 6,
        "enum_budget": 10 ** 7,
        "divisor_budget": 10 ** 6,
        "coefficient_budget": 64,
        "samples": 5,
        "seed": 0,
    }
    assert settings.distance_budgets == {
        "support_budget": 10 ** 6,
        "enum_budget": 10 ** 7,
    }


def test_call_branches_out():
    settings = Settings(seed=1)
    branched = settings(enum_budget=10, samples=0)
    assert branched is not settings
    assert branched.enum_budget == 10
    assert branched.samples == 0
    assert branched.seed == 1
    assert settings.enum_budget == 10 ** 7
    assert settings() == settings


def test_equality():
    assert Settings() == Settings()
    assert Settings(seed=2) != Settings()
    assert Settings() != "settings"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"support_budget": 0},
        {"enum_budget": -1},
        {"divisor_budget": 1.5},
        {"coefficient_budget": 0},
        {"samples": -1},
    ],
)
def test_invalid(kwargs):
    with pytest.raises(ValueError):
        Settings(**kwargs)
    with pytest.raises(ValueError):
        Settings()(**kwargs)
