from typing import TYPE_CHECKING, Sequence, Tuple, Union

if TYPE_CHECKING:
    from .field import FpPoly  # pragma: nocover
    from .ring import RPoly  # pragma: nocover

Coefficients = Tuple[int, ...]
CoefficientTypes = Union[Sequence[int], Coefficients]

# Something that can become an FpPoly: text per the grammar, a constant, a coefficient
# sequence (index i = coefficient of x^i), or an FpPoly.
PolyTypes = Union[str, int, CoefficientTypes, "FpPoly"]

# Something that can become an RPoly: "f0;f1;f2;f3" text, four PolyTypes, or an RPoly.
RPolyTypes = Union[str, Sequence[PolyTypes], "RPoly"]

# A four component element a + ub + vc + uvd of R.
Quadruple = Tuple[int, int, int, int]
