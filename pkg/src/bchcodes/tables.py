"""Reference rows: parameters, expected [n, k, d] and the optimality note."""

from __future__ import annotations

from dataclasses import dataclass

from .params import BchParams


@dataclass(frozen=True)
class TableRow:
    params: BchParams
    n: int
    k: int
    d: int
    note: str


def _rows(raw):
    return tuple(TableRow(BchParams(*p), n, k, d, note) for p, (n, k, d), note in raw)


# l1 = 0
TABLE_1 = _rows([
    ((3, 2, 1, 1, 0), (8, 3, 5), "Optimal"),
    ((3, 3, 1, 1, 0), (26, 4, 17), "Optimal"),
    ((3, 4, 1, 1, 0), (80, 5, 53), "Optimal"),
    ((4, 2, 1, 1, 0), (15, 3, 11), "Optimal"),
    ((4, 2, 1, 2, 0), (15, 6, 7), "d_optimal=8"),
    ((4, 3, 1, 1, 0), (63, 4, 47), "Optimal"),
    ((4, 3, 1, 2, 0), (63, 11, 31), "d_best=35"),
    ((5, 2, 1, 1, 0), (24, 3, 19), "Optimal"),
    ((5, 2, 1, 2, 0), (24, 6, 14), "d_optimal=15"),
    ((5, 2, 1, 3, 0), (24, 11, 9), "d_best=10"),
    ((5, 2, 2, 1, 0), (12, 4, 7), "d_optimal=8"),
    ((5, 3, 1, 1, 0), (124, 4, 99), "Optimal"),
    ((5, 3, 1, 2, 0), (124, 11, 74), "d_best=83"),
    ((5, 3, 1, 3, 0), (124, 30, 49), "d_best=53"),
    ((5, 3, 2, 1, 0), (62, 7, 37), "d_best=42"),
])

# l0 = 0
TABLE_2 = _rows([
    ((2, 3, 1, 0, 1), (7, 4, 3), "Optimal"),
    ((2, 4, 1, 0, 1), (15, 5, 7), "Optimal"),
    ((2, 4, 1, 0, 2), (15, 11, 3), "Optimal"),
    ((2, 5, 1, 0, 1), (31, 6, 15), "Optimal"),
    ((2, 5, 1, 0, 2), (31, 16, 7), "d_optimal=8"),
    ((2, 5, 1, 0, 3), (31, 26, 3), "Optimal"),
    ((2, 6, 1, 0, 1), (63, 7, 31), "Optimal"),
    ((2, 6, 1, 0, 2), (63, 24, 15), "d_best=16"),
    ((2, 6, 1, 0, 3), (63, 45, 7), "d_best=8"),
    ((2, 6, 1, 0, 4), (63, 57, 3), "Optimal"),
    ((3, 3, 1, 0, 1), (26, 11, 8), "d_best=9"),
    ((3, 3, 2, 0, 1), (13, 7, 4), "d_optimal=5"),
    ((3, 4, 1, 0, 1), (80, 20, 26), "d_best=33"),
    ((3, 4, 1, 0, 2), (80, 60, 8), "Best Known"),
    ((3, 4, 2, 0, 1), (40, 12, 13), "d_best=18"),
    ((3, 4, 2, 0, 2), (40, 32, 4), "d_optimal=5"),
    ((3, 5, 1, 0, 1), (242, 37, 80), "d_best=98"),
    ((3, 5, 1, 0, 2), (242, 157, 26), "Best Known"),
    ((3, 5, 1, 0, 3), (242, 217, 8), "Best Known"),
    ((3, 5, 2, 0, 1), (121, 21, 40), "d_best=55"),
    ((3, 5, 2, 0, 2), (121, 81, 13), "d_best=15"),
    ((3, 5, 2, 0, 3), (121, 111, 4), "d_optimal=5"),
    ((4, 2, 1, 0, 1), (15, 11, 3), "d_optimal=4"),
    ((4, 3, 1, 0, 1), (63, 30, 15), "d_best=18"),
    ((4, 3, 1, 0, 2), (63, 57, 3), "d_optimal=4"),
    ((4, 3, 3, 0, 1), (21, 12, 5), "d_optimal=7"),
    ((4, 4, 3, 0, 1), (85, 31, 21), "d_best=29"),
    ((4, 4, 3, 0, 2), (85, 73, 5), "d_best=6"),
    ((5, 2, 1, 0, 1), (24, 18, 4), "d_optimal=5"),
    ((5, 2, 2, 0, 1), (12, 10, 2), "Optimal"),
    ((5, 3, 2, 0, 1), (62, 35, 12), "d_best=15"),
    ((5, 3, 2, 0, 2), (62, 59, 2), "Optimal"),
    ((5, 3, 4, 0, 1), (31, 19, 6), "d_best=8"),
])

# general (l0, l1); rows with l0 = (q-1)/lambda coincide with (0, l1 + 1)
TABLE_3 = _rows([
    ((3, 3, 1, 1, 1), (26, 17, 5), "d_optimal=6"),
    ((3, 4, 1, 1, 1), (80, 38, 17), "d_best=21"),
    ((3, 4, 1, 2, 1), (80, 60, 8), "Best Known"),
    ((3, 4, 1, 1, 2), (80, 68, 5), "d_optimal=6"),
    ((3, 4, 1, 2, 2), (80, 76, 2), "Optimal"),
    ((3, 5, 1, 1, 1), (242, 87, 53), "d_best=59"),
    ((3, 5, 1, 2, 1), (242, 157, 26), "Best Known"),
    ((3, 5, 1, 1, 2), (242, 187, 17), "Best Known"),
    ((3, 5, 1, 2, 2), (242, 217, 8), "Best Known"),
    ((3, 5, 1, 1, 3), (242, 227, 5), "Best Known"),
    ((3, 5, 1, 2, 3), (242, 237, 2), "Optimal"),
    ((5, 2, 1, 1, 1), (24, 20, 3), "d_optimal=4"),
    ((5, 2, 1, 2, 1), (24, 22, 2), "Optimal"),
    ((5, 3, 1, 1, 1), (124, 79, 19), "Best Known"),
    ((5, 3, 1, 2, 1), (124, 91, 14), "Best Known"),
    ((5, 3, 1, 3, 1), (124, 103, 9), "d_best=10"),
    ((5, 3, 1, 1, 2), (124, 118, 3), "d_optimal=4"),
    ((5, 3, 1, 2, 2), (124, 121, 2), "Optimal"),
    ((5, 3, 2, 1, 1), (62, 47, 7), "d_best=8"),
])

TABLES = {1: TABLE_1, 2: TABLE_2, 3: TABLE_3}
