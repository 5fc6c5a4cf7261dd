from typing import Any, Dict, Optional

__all__ = ["Settings"]


class Settings:
    """
    Work budgets and the sampling seed shared by the analyses.

    Calling an instance with overrides branches out to a new instance and
    leaves the original untouched.
    """

    FIELDS = (
        "support_budget",
        "enum_budget",
        "divisor_budget",
        "coefficient_budget",
        "samples",
        "seed",
    )

    def __init__(
        self,
        *,
        support_budget: int = 10 ** 6,
        enum_budget: int = 10 ** 7,
        divisor_budget: int = 10 ** 6,
        coefficient_budget: int = 64,
        samples: int = 5,
        seed: int = 0,
    ) -> None:
        for name, value in (
            ("support_budget", support_budget),
            ("enum_budget", enum_budget),
            ("divisor_budget", divisor_budget),
            ("coefficient_budget", coefficient_budget),
        ):
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        if samples < 0:
            raise ValueError(f"samples must be non-negative, got {samples!r}")

        self.support_budget = support_budget
        self.enum_budget = enum_budget
        self.divisor_budget = divisor_budget
        self.coefficient_budget = coefficient_budget
        self.samples = samples
        self.seed = seed

    def __call__(
        self,
        *,
        support_budget: Optional[int] = None,
        enum_budget: Optional[int] = None,
        divisor_budget: Optional[int] = None,
        coefficient_budget: Optional[int] = None,
        samples: Optional[int] = None,
        seed: Optional[int] = None,
    ) -> "Settings":
        overrides = {
            "support_budget": support_budget,
            "enum_budget": enum_budget,
            "divisor_budget": divisor_budget,
            "coefficient_budget": coefficient_budget,
            "samples": samples,
            "seed": seed,
        }
        settings = self.as_dict()
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return self.__class__(**settings)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Settings):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __repr__(self) -> str:  # pragma: nocover
        fields = ", ".join(f"{k}={v!r}" for k, v in self.as_dict().items())
        return f"<Settings {fields}>"

    def as_dict(self) -> Dict[str, Any]:
        return {name: getattr(self, name) for name in self.FIELDS}

    @property
    def distance_budgets(self) -> Dict[str, int]:
        return {"support_budget": self.support_budget, "enum_budget": self.enum_budget}
