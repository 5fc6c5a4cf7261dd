import logging
import warnings
from abc import ABC, abstractmethod
from enum import Enum
from itertools import combinations
from math import comb
from types import MappingProxyType
from typing import (
    Any,
    ClassVar,
    Dict,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Type,
)

import numpy as np

from .codes import Code
from .errors import (
    BudgetExceeded,
    HypothesisUnmet,
    NotApplicable,
    OutOfRange,
    ZeroCode,
)
from .linalg import left_kernel_vector, rank as matrix_rank
from .ring import RPoly

__all__ = [
    "hamming_weight",
    "MinimumWeight",
    "DistanceOracle",
    "SupportOracle",
    "EnumOracle",
    "min_distance_support",
    "min_distance_enum",
    "min_distance",
    "ExpansionKind",
    "PAdicExpansion",
    "p_adic_classify",
    "distance_formula",
    "hypothesis_met",
    "DistanceReport",
    "distance_report",
]

logger = logging.getLogger(__name__)

# Below this many codewords enumeration is tried before support search
ENUM_PREFERRED = 10 ** 5

CHUNK = 1 << 14


def hamming_weight(f: RPoly) -> int:
    """
    Number of positions whose R-symbol (a, b, c, d) is nonzero.
    """
    return len(f.support())


def _symbol_weights(words: np.ndarray, n: int) -> np.ndarray:
    return words.reshape(-1, 4, n).any(axis=1).sum(axis=1)


class MinimumWeight(NamedTuple):
    distance: int
    witness: RPoly
    method: str


class DistanceOracle(ABC):
    """
    Exact minimum distance of a nonzero code, with a minimum weight codeword.
    """

    method: ClassVar[str]

    # Automatically register all the subclasses in this dict
    __registry: ClassVar[Dict[str, Type["DistanceOracle"]]] = {}
    registry = MappingProxyType(__registry)

    def __init_subclass__(cls) -> None:
        if not getattr(cls, "method", None) or ABC in cls.__bases__:
            return

        if cls.method in cls.__registry:
            raise TypeError(
                "Subclasses of DistanceOracle must define a unique method. "
                f"{cls.method!r} is already defined as {cls.__registry[cls.method]!r}"
            )

        cls.__registry[cls.method] = cls

    def __init__(self, budget: int) -> None:
        self.budget = budget

    def __call__(self, code: Code) -> MinimumWeight:
        if code.is_zero:
            raise ZeroCode(f"Distance of {code!r} is undefined")
        return self.search(code)

    @abstractmethod
    def search(self, code: Code) -> MinimumWeight:
        ...  # pragma: nocover

    def _witness(self, code: Code, vector: np.ndarray) -> RPoly:
        return RPoly.from_vector(vector % code.p, code.field, code.modulus)


class SupportOracle(DistanceOracle):
    """
    Grows the support size w and asks, for every support S of that size
    containing position 0, whether some nonzero codeword vanishes outside S.
    That happens exactly when the basis restricted to the other columns
    loses rank. Fixing position 0 is enough since the signed shift keeps the
    code and the weight.
    """

    method = "support"

    def search(self, code: Code) -> MinimumWeight:
        basis = code.basis
        G, n, p = basis.matrix, code.n, code.p
        tests = 0
        for w in range(1, n + 1):
            for rest in combinations(range(1, n), w - 1):
                tests += 1
                if tests > self.budget:
                    needed = sum(comb(n - 1, j) for j in range(w))
                    raise BudgetExceeded(
                        f"Support search on {code!r}", needed=needed, budget=self.budget
                    )
                support = {0, *rest}
                columns = [
                    layer * n + i
                    for layer in range(4)
                    for i in range(n)
                    if i not in support
                ]
                restricted = G[:, columns]
                if matrix_rank(restricted, p) == basis.dim:
                    continue
                y = left_kernel_vector(restricted, p)
                assert y is not None
                witness = self._witness(code, y @ G)
                logger.debug("Support %s holds %s", sorted(support), witness)
                return MinimumWeight(w, witness, self.method)

        raise AssertionError(f"No codeword found in {code!r}")  # pragma: nocover


class EnumOracle(DistanceOracle):
    """
    Walks every nonzero F_p-combination of the basis rows in numpy chunks.
    """

    method = "enum"

    def search(self, code: Code) -> MinimumWeight:
        basis = code.basis
        G, n, p, k = basis.matrix, code.n, code.p, basis.dim
        total = p ** k
        if total > self.budget:
            raise BudgetExceeded(
                f"Codeword enumeration of {code!r}", needed=total, budget=self.budget
            )

        powers = p ** np.arange(k, dtype=np.int64)
        best: Optional[Tuple[int, np.ndarray]] = None
        for start in range(1, total, CHUNK):
            index = np.arange(start, min(start + CHUNK, total), dtype=np.int64)
            digits = (index[:, None] // powers) % p
            words = digits @ G % p
            weights = _symbol_weights(words, n)
            at = int(np.argmin(weights))
            if best is None or weights[at] < best[0]:
                best = (int(weights[at]), words[at].copy())

        assert best is not None
        return MinimumWeight(best[0], self._witness(code, best[1]), self.method)


def min_distance_support(code: Code, budget: int = 10 ** 6) -> int:
    return SupportOracle(budget)(code).distance


def min_distance_enum(code: Code, budget: int = 10 ** 7) -> int:
    return EnumOracle(budget)(code).distance


def min_distance(
    code: Code, *, support_budget: int = 10 ** 6, enum_budget: int = 10 ** 7
) -> MinimumWeight:
    """
    Runs the cheaper oracle first and falls back to the other when it runs
    out of budget.
    """
    if code.is_zero:
        raise ZeroCode(f"Distance of {code!r} is undefined")

    budgets = {"support": support_budget, "enum": enum_budget}
    order = ["support", "enum"]
    if code.p ** code.dim <= min(enum_budget, ENUM_PREFERRED):
        order.reverse()

    error: Optional[BudgetExceeded] = None
    for method in order:
        oracle = DistanceOracle.registry[method](budgets[method])
        try:
            return oracle(code)
        except BudgetExceeded as e:
            logger.info("%s oracle gave up: %s", method, e)
            error = e

    assert error is not None
    raise error


class ExpansionKind(Enum):
    ZERO = "zero"
    NON_ZERO = "non-zero"
    FULL = "full"


class PAdicExpansion(NamedTuple):
    """
    t = b_0 + b_1 p + ... + b_(l-1) p^(l-1), read from the top digit down.

    q counts the leading nonzero digits b_(l-1), b_(l-2), ... A full
    expansion has no zero digit, a zero expansion of length q is zero after
    its q leading digits, and anything else is a non-zero expansion.
    """

    t: int
    p: int
    l: int
    digits: Tuple[int, ...]
    kind: ExpansionKind
    q: int

    def leading(self) -> List[int]:
        return [self.digits[self.l - i] for i in range(1, self.q + 1)]

    def __str__(self) -> str:
        if self.kind is ExpansionKind.FULL:
            return "full"
        return f"{self.kind.value}(q={self.q})"


def p_adic_classify(t: int, p: int, l: int) -> PAdicExpansion:
    if l < 1 or not 0 < t < p ** l:
        raise OutOfRange(f"Expected 0 < t < {p}^{l}, got t = {t}")

    digits = tuple((t // p ** i) % p for i in range(l))
    top_down = digits[::-1]
    q = next((i for i, b in enumerate(top_down) if not b), l)
    if q == l:
        kind = ExpansionKind.FULL
    elif any(top_down[q:]):
        kind = ExpansionKind.NON_ZERO
    else:
        kind = ExpansionKind.ZERO
    return PAdicExpansion(t, p, l, digits, kind, q)


def _p_power_exponent(n: int, p: int) -> Optional[int]:
    l = 0
    while n % p == 0:
        n //= p
        l += 1
    return l if n == 1 else None


def _exponents(code: Code) -> Tuple[int, int, int, int]:
    """
    t_i with g_i = (x+1)^t_i; an absent layer gives t_i = n.
    """
    g = code.field.poly((1, 1))
    exponents = []
    for g_i in code.torsion:
        t = g_i.degree or 0
        if g_i != g ** t:
            raise NotApplicable(f"{g_i} is not a power of x+1")
        exponents.append(t)
    t1, t2, t3, t4 = exponents
    return t1, t2, t3, t4


def hypothesis_met(code: Code) -> bool:
    t1, t2, t3, t4 = _exponents(code)
    return t1 > t2 > t4 > 0 and t1 > t3 > t4 > 0


def distance_formula(code: Code) -> int:
    """
    Closed form distance of a code of length p^l from the p-adic digits of
    t4, where g4 = (x+1)^t4.

    A code outside the chain hypothesis t1 > t2 > t4 > 0, t1 > t3 > t4 > 0
    is still evaluated, with a HypothesisUnmet warning.
    """
    p, n = code.p, code.n
    l = _p_power_exponent(n, p)
    if not l:
        raise NotApplicable(f"Length {n} is not a positive power of {p}")
    if code.is_zero:
        raise ZeroCode(f"Distance of {code!r} is undefined")

    t1, t2, t3, t4 = _exponents(code)
    if t4 == 0:
        raise NotApplicable(f"{code!r} contains uv, t4 = 0")
    if not hypothesis_met(code):
        warnings.warn(
            f"Exponents t = {(t1, t2, t3, t4)} break t1 > t2, t3 > t4 > 0",
            HypothesisUnmet,
        )

    if t4 <= p ** (l - 1):
        return 2

    expansion = p_adic_classify(t4, p, l)
    product = 1
    for b in expansion.leading():
        product *= b + 1
    if expansion.kind is ExpansionKind.NON_ZERO:
        return 2 * product
    return product


class DistanceReport(NamedTuple):
    d_oracle: Optional[int]
    d_formula: Optional[int]
    method: str
    hypothesis_met: Optional[bool]
    witness: Optional[RPoly] = None
    undefined: bool = False

    @property
    def agreement(self) -> Optional[bool]:
        if self.d_oracle is None or self.d_formula is None:
            return None
        return self.d_oracle == self.d_formula

    def _oracle_field(self) -> Any:
        if self.d_oracle is not None:
            return self.d_oracle
        return "skipped(budget)" if self.method == "skipped" else "not-run"

    def as_dict(self) -> Dict[str, Any]:
        if self.undefined:
            return {
                "d_oracle": "undefined",
                "d_formula": "undefined",
                "method": self.method,
                "hypothesis_met": None,
                "agreement": None,
                "witness": None,
            }
        return {
            "d_oracle": self._oracle_field(),
            "d_formula": "not-applicable" if self.d_formula is None else self.d_formula,
            "method": self.method,
            "hypothesis_met": self.hypothesis_met,
            "agreement": self.agreement,
            "witness": None if self.witness is None else str(self.witness),
        }


def distance_report(
    code: Code,
    *,
    support_budget: int = 10 ** 6,
    enum_budget: int = 10 ** 7,
    methods: Sequence[str] = ("oracle", "formula"),
) -> DistanceReport:
    if code.is_zero:
        return DistanceReport(None, None, "none", None, undefined=True)

    d_oracle, witness, method = None, None, "formula"
    if "oracle" in methods:
        try:
            d_oracle, witness, method = min_distance(
                code, support_budget=support_budget, enum_budget=enum_budget
            )
        except BudgetExceeded as e:
            logger.warning("Oracle distance of %r skipped: %s", code, e)
            method = "skipped"

    d_formula, met = None, None
    if "formula" in methods:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", HypothesisUnmet)
                d_formula = distance_formula(code)
            met = hypothesis_met(code)
        except NotApplicable as e:
            logger.debug("Formula skipped for %r: %s", code, e)

    report = DistanceReport(d_oracle, d_formula, method, met, witness)
    if report.agreement is False:
        logger.info(
            "Distance mismatch on %r: oracle %s, formula %s, witness %s",
            code,
            d_oracle,
            d_formula,
            witness,
        )
    return report
