"""
Printed generator families of the negacyclic codes of length 5 over R with
p = 5, where g = x + 1 and x^5 + 1 = g^5.

Each row builds its generators from g, x and the free coefficients c, one
(f0, f1, f2, f3) tuple per generator.
"""
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple

from .field import FpPoly
from .types import PolyTypes

__all__ = ["TableRow", "TABLES", "rows"]

Components = Tuple[PolyTypes, ...]
Build = Callable[[FpPoly, FpPoly, Sequence[int]], List[Components]]
Condition = Callable[[Sequence[int]], bool]

P = 5
N = 5


class TableRow(NamedTuple):
    table: int
    row: int
    label: str
    coefficients: int
    build: Build
    rank: int
    distance: int
    condition: Optional[Condition] = None

    def admits(self, c: Sequence[int]) -> bool:
        return self.condition is None or self.condition(c)


def _table(table: int, *rows: Tuple) -> List[TableRow]:
    return [TableRow(table, i, *row) for i, row in enumerate(rows, start=1)]


TABLE_1 = _table(
    1,
    (
        "<g^4+uc_0g^3+vc_1g^3+uvc_2g^3>",
        3,
        lambda g, x, c: [(g ** 4, c[0] * g ** 3, c[1] * g ** 3, c[2] * g ** 3)],
        1,
        5,
        lambda c: c[0] * c[1] % P == 0,
    ),
    (
        "<g^3+uc_0g^2+vc_1g^2+uv(c_2+c_3x)g>",
        4,
        lambda g, x, c: [
            (g ** 3, c[0] * g ** 2, c[1] * g ** 2, (c[2] + c[3] * x) * g)
        ],
        2,
        4,
    ),
    (
        "<g^2+u(c_0+c_1x)+v(c_2+c_3x)+uv(c_4+c_5x)>",
        6,
        lambda g, x, c: [
            (g ** 2, c[0] + c[1] * x, c[2] + c[3] * x, c[4] + c[5] * x)
        ],
        3,
        3,
        lambda c: c[0] == c[1] or c[2] == c[3],
    ),
    (
        "<g+uc_0+vc_1+uvc_2>",
        3,
        lambda g, x, c: [(g, c[0], c[1], c[2])],
        4,
        2,
    ),
    ("<1>", 0, lambda g, x, c: [(1,)], 5, 1),
)

TABLE_2 = _table(
    2,
    (
        "<ug^4+vc_0g^4+uvc_1g^3>",
        2,
        lambda g, x, c: [(0, g ** 4, c[0] * g ** 4, c[1] * g ** 3)],
        1,
        5,
    ),
    (
        "<vg^4+uvc_0g^3>",
        1,
        lambda g, x, c: [(0, 0, g ** 4, c[0] * g ** 3)],
        1,
        5,
    ),
    ("<uvg^4>", 0, lambda g, x, c: [(0, 0, 0, g ** 4)], 1, 5),
    (
        "<ug^3+v(c_0+c_1x)g^3+uv(c_2+c_3x)g>",
        4,
        lambda g, x, c: [
            (0, g ** 3, (c[0] + c[1] * x) * g ** 3, (c[2] + c[3] * x) * g)
        ],
        2,
        4,
    ),
    (
        "<vg^3+uv(c_0+c_1x)g>",
        2,
        lambda g, x, c: [(0, 0, g ** 3, (c[0] + c[1] * x) * g)],
        2,
        4,
    ),
    ("<uvg^3>", 0, lambda g, x, c: [(0, 0, 0, g ** 3)], 2, 4),
    (
        "<ug^2+v(c_0+c_1x+c_2x^2)g^2+uv(c_3+c_4x)>",
        5,
        lambda g, x, c: [
            (
                0,
                g ** 2,
                (c[0] + c[1] * x + c[2] * x ** 2) * g ** 2,
                c[3] + c[4] * x,
            )
        ],
        3,
        3,
    ),
    (
        "<vg^2+uv(c_0+c_1x)>",
        2,
        lambda g, x, c: [(0, 0, g ** 2, c[0] + c[1] * x)],
        3,
        3,
    ),
    ("<uvg^2>", 0, lambda g, x, c: [(0, 0, 0, g ** 2)], 3, 3),
    (
        "<ug+v(c_0+c_1x+c_2x^2+c_3x^3)g+uvc_4>",
        5,
        lambda g, x, c: [
            (
                0,
                g,
                (c[0] + c[1] * x + c[2] * x ** 2 + c[3] * x ** 3) * g,
                c[4],
            )
        ],
        4,
        2,
    ),
    ("<vg+uvc_0>", 1, lambda g, x, c: [(0, 0, g, c[0])], 4, 2),
    ("<uvg>", 0, lambda g, x, c: [(0, 0, 0, g)], 4, 2),
    (
        "<u+v(c_0+c_1x+c_2x^2+c_3x^3+c_4x^4)>",
        5,
        lambda g, x, c: [
            (
                0,
                1,
                c[0] + c[1] * x + c[2] * x ** 2 + c[3] * x ** 3 + c[4] * x ** 4,
            )
        ],
        5,
        1,
    ),
    ("<v>", 0, lambda g, x, c: [(0, 0, 1)], 5, 1),
    ("<uv>", 0, lambda g, x, c: [(0, 0, 0, 1)], 5, 1),
)

TABLE_3 = _table(
    3,
    (
        "<g^4+uc_0g^3+vc_1g^3+uvc_2g^2, uvg^3>",
        3,
        lambda g, x, c: [
            (g ** 4, c[0] * g ** 3, c[1] * g ** 3, c[2] * g ** 2),
            (0, 0, 0, g ** 3),
        ],
        2,
        4,
    ),
    (
        "<ug^4+uvc_0g^3, vg^4+uvc_1g^3>",
        2,
        lambda g, x, c: [
            (0, g ** 4, 0, c[0] * g ** 3),
            (0, 0, g ** 4, c[1] * g ** 3),
        ],
        2,
        5,
    ),
    (
        "<ug^4+v(c_0+c_1x)g^3+uvg^2, uvg^3>",
        2,
        lambda g, x, c: [
            (0, g ** 4, (c[0] + c[1] * x) * g ** 3, g ** 2),
            (0, 0, 0, g ** 3),
        ],
        2,
        4,
    ),
    (
        "<ug^4+vc_0g^3+uvc_1g^2, vg^4>",
        2,
        lambda g, x, c: [
            (0, g ** 4, c[0] * g ** 3, c[1] * g ** 2),
            (0, 0, g ** 4),
        ],
        2,
        5,
    ),
    (
        "<ug^4+uvc_0g^2, uvg^3>",
        1,
        lambda g, x, c: [(0, g ** 4, 0, c[0] * g ** 2), (0, 0, 0, g ** 3)],
        2,
        4,
    ),
    (
        "<vg^4+uvc_0g^2, uvg^3>",
        1,
        lambda g, x, c: [(0, 0, g ** 4, c[0] * g ** 2), (0, 0, 0, g ** 3)],
        2,
        4,
    ),
    (
        "<vg^4+uvc_0g, uvg^2>",
        1,
        lambda g, x, c: [(0, 0, g ** 4, c[0] * g), (0, 0, 0, g ** 2)],
        3,
        3,
    ),
    (
        "<g^3+uc_0g+vc_1g+uvc_2, ug^2+vc_3g+uvc_4, vg^2+uvc_5, uvg>",
        6,
        lambda g, x, c: [
            (g ** 3, c[0] * g, c[1] * g, c[2]),
            (0, g ** 2, c[3] * g, c[4]),
            (0, 0, g ** 2, c[5]),
            (0, 0, 0, g),
        ],
        5,
        2,
        lambda c: c[0] * c[2] % P == 0,
    ),
    (
        "<ug^3+v(c_0+c_1x)g^3+uv(c_2+c_3x), uvg^2>",
        4,
        lambda g, x, c: [
            (0, g ** 3, (c[0] + c[1] * x) * g ** 3, c[2] + c[3] * x),
            (0, 0, 0, g ** 2),
        ],
        3,
        3,
    ),
    (
        "<vg^3+uvc_0, uvg>",
        1,
        lambda g, x, c: [(0, 0, g ** 3, c[0]), (0, 0, 0, g)],
        4,
        2,
    ),
    (
        "<g^2+uc_0+vc_1, ug+vc_2, vg, uv>",
        3,
        lambda g, x, c: [
            (g ** 2, c[0], c[1]),
            (0, g, c[2]),
            (0, 0, g),
            (0, 0, 0, 1),
        ],
        6,
        1,
    ),
    (
        "<ug^2+vc_0+uvc_1, vg^2+uvc_2, uvg>",
        3,
        lambda g, x, c: [
            (0, g ** 2, c[0], c[1]),
            (0, 0, g ** 2, c[2]),
            (0, 0, 0, g),
        ],
        7,
        2,
    ),
    (
        "<vg^2+uvc_2, uvg>",
        3,
        lambda g, x, c: [(0, 0, g ** 2, c[2]), (0, 0, 0, g)],
        4,
        2,
    ),
    (
        "<g+uc_0+vc_1, uv>",
        2,
        lambda g, x, c: [(g, c[0], c[1]), (0, 0, 0, 1)],
        5,
        1,
    ),
    ("<g+uc_0, v>", 1, lambda g, x, c: [(g, c[0]), (0, 0, 1)], 5, 1),
    (
        "<g+vc_0, u+vc_1>",
        2,
        lambda g, x, c: [(g, 0, c[0]), (0, 1, c[1])],
        5,
        1,
    ),
    ("<g, u, v>", 0, lambda g, x, c: [(g,), (0, 1), (0, 0, 1)], 6, 1),
    (
        "<ug+vc_0, vg, uv>",
        1,
        lambda g, x, c: [(0, g, c[0]), (0, 0, g), (0, 0, 0, 1)],
        9,
        1,
    ),
    ("<vg, uv>", 0, lambda g, x, c: [(0, 0, g), (0, 0, 0, 1)], 5, 1),
    ("<u, v>", 0, lambda g, x, c: [(0, 1), (0, 0, 1)], 10, 1),
)

TABLES = {1: TABLE_1, 2: TABLE_2, 3: TABLE_3}


def rows(*tables: int) -> List[TableRow]:
    return [row for table in tables or TABLES for row in TABLES[table]]
