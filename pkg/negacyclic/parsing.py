"""
Text grammar for polynomials over F_p and for four-part ring polynomials.

    poly  := ["+"|"-"] term (("+"|"-") term)*
    term  := coeff | [coeff] "x" ["^" exp] | [coeff] "(" poly ")" ["^" exp]

Coefficients are decimal integers reduced mod p. A ring polynomial is written
"f0;f1;f2;f3", meaning f0 + u*f1 + v*f2 + uv*f3, with missing trailing parts 0.
"""
from typing import Callable, List, Sequence, Tuple

import pyparsing as pp

from .errors import FieldMismatch, GrammarError
from .field import FpPoly, PrimeField
from .types import PolyTypes

__all__ = ["parse_poly", "parse_components", "format_components", "to_poly"]

Builder = Callable[[PrimeField], FpPoly]


def _constant(tokens: pp.ParseResults) -> Builder:
    value = tokens[0]
    return lambda field: field.poly((value,))


def _monomial(tokens: pp.ParseResults) -> Builder:
    items = list(tokens)
    at = items.index("x")
    coeff = items[0] if at == 1 else 1
    exp = items[at + 1] if len(items) > at + 1 else 1
    return lambda field: field.monomial(exp, coeff)


def _power(tokens: pp.ParseResults) -> Builder:
    items = list(tokens)
    at = next(i for i, item in enumerate(items) if callable(item))
    coeff = items[0] if at == 1 else 1
    exp = items[at + 1] if len(items) > at + 1 else 1
    base = items[at]
    return lambda field: base(field) ** exp * coeff


def _sum(tokens: pp.ParseResults) -> Builder:
    terms: List[Tuple[int, Builder]] = []
    sign = 1
    for item in tokens:
        if item == "-":
            sign = -1
        elif item == "+":
            sign = 1
        else:
            terms.append((sign, item))
            sign = 1

    def build(field: PrimeField) -> FpPoly:
        total = field.zero
        for sign, term in terms:
            total = total + term(field) * sign
        return total

    return build


def _make_grammar() -> pp.ParserElement:
    integer = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    exponent = pp.Suppress("^") + integer
    sign = pp.one_of("+ -")

    poly = pp.Forward()
    power = (
        pp.Optional(integer)
        + pp.Suppress("(")
        + poly
        + pp.Suppress(")")
        + pp.Optional(exponent)
    ).set_parse_action(_power)
    monomial = (pp.Optional(integer) + pp.Literal("x") + pp.Optional(exponent))
    monomial.set_parse_action(_monomial)
    constant = integer.copy().add_parse_action(_constant)

    term = power | monomial | constant
    poly <<= (pp.Optional(sign) + term + pp.ZeroOrMore(sign + term)).set_parse_action(
        _sum
    )
    return poly


POLY = _make_grammar()


def parse_poly(text: str, field: PrimeField) -> FpPoly:
    """
    Parses a polynomial, e.g. "1+2x+x^3", "(x+1)^4" or "3x^2-1".
    """
    try:
        result = POLY.parse_string(text, parse_all=True)
    except pp.ParseException as error:
        raise GrammarError(
            f"Invalid polynomial ({error.msg})", text=text, position=error.loc
        ) from error
    return result[0](field)


def parse_components(
    text: str, field: PrimeField
) -> Tuple[FpPoly, FpPoly, FpPoly, FpPoly]:
    """
    Parses "f0;f1;f2;f3" into four polynomials; missing trailing parts are 0.
    """
    parts = text.split(";")
    if len(parts) > 4:
        position = sum(len(part) + 1 for part in parts[:4]) - 1
        raise GrammarError("More than four components", text=text, position=position)

    components = []
    offset = 0
    for part in parts:
        try:
            components.append(parse_poly(part, field))
        except GrammarError as error:
            raise GrammarError(
                "Invalid component", text=text, position=offset + error.position
            ) from error
        offset += len(part) + 1

    while len(components) < 4:
        components.append(field.zero)
    f0, f1, f2, f3 = components
    return f0, f1, f2, f3


def format_components(components: Sequence[FpPoly]) -> str:
    return ";".join(str(component) for component in components)


def to_poly(value: PolyTypes, field: PrimeField) -> FpPoly:
    """
    Coerces text, an integer, a coefficient sequence or an FpPoly.
    """
    if isinstance(value, FpPoly):
        if value.field != field:
            raise FieldMismatch(field, value.field)
        return value
    if isinstance(value, str):
        return parse_poly(value, field)
    if isinstance(value, int):
        return field.poly((value,))
    return field.poly(value)
