"""Frozen coefficient tables for the first Weyl-Mahonian polynomials.

Each table maps a t-power to the list of q-coefficients starting at q^0.
These are the published reference values the acceptance suite pins the
implementation against; transcribed by hand, with row sums cross-checked
against the group orders.
"""

from weylmahonian.algebra import MultiPoly

BC_TABLES = {
    1: {0: [1], 1: [0, 1]},
    2: {
        0: [1],
        1: [0, 1, 1, 1],
        2: [0, 1, 1, 1],
        3: [0, 0, 0, 0, 1],
    },
    3: {
        0: [1],
        1: [0, 1, 1, 1, 1, 1],
        2: [0, 1, 2, 2, 2, 2, 1, 1],
        3: [0, 1, 1, 3, 2, 2, 3, 1, 1],
        4: [0, 0, 1, 1, 2, 2, 2, 2, 1],
        5: [0, 0, 0, 0, 1, 1, 1, 1, 1],
        6: [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    },
    4: {
        0: [1],
        1: [0, 1, 1, 1, 1, 1, 1, 1],
        2: [0, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1, 1],
        3: [0, 1, 2, 4, 4, 6, 6, 6, 6, 5, 4, 2, 2],
        4: [0, 1, 2, 4, 6, 7, 8, 9, 9, 8, 7, 5, 3, 2, 1],
        5: [0, 0, 1, 3, 5, 7, 9, 10, 12, 10, 9, 7, 5, 3, 1],
        6: [0, 0, 1, 2, 3, 5, 7, 8, 9, 9, 8, 7, 6, 4, 2, 1],
        7: [0, 0, 0, 0, 2, 2, 4, 5, 6, 6, 6, 6, 4, 4, 2, 1],
        8: [0, 0, 0, 0, 0, 1, 1, 2, 2, 3, 3, 3, 3, 2, 2, 1],
        9: [0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1],
        10: [0] * 16 + [1],
    },
}

D_TABLES = {
    1: {0: [1]},
    2: {
        0: [1],
        1: [0, 1],
        2: [0, 1],
        3: [0, 0, 1],
    },
    3: {
        0: [1],
        1: [0, 1, 1],
        2: [0, 1, 1, 1, 1, 1],
        3: [0, 1, 1, 2, 1, 1, 1],
        4: [0, 0, 1, 2, 2, 1],
        5: [0, 0, 1, 1, 1],
    },
    4: {
        0: [1],
        1: [0, 1, 1, 1],
        2: [0, 1, 2, 1, 1, 1, 1, 2, 1, 1],
        3: [0, 1, 1, 3, 3, 4, 4, 3, 3, 1, 1],
        4: [0, 1, 2, 3, 4, 5, 6, 6, 5, 3, 1],
        5: [0, 0, 1, 3, 6, 7, 8, 7, 6, 3, 1],
        6: [0, 0, 1, 3, 5, 6, 6, 5, 4, 3, 2, 1],
        7: [0, 0, 1, 1, 3, 3, 4, 4, 3, 3, 1, 1],
        8: [0, 0, 0, 1, 1, 2, 1, 1, 1, 1, 2, 1],
        9: [0] * 9 + [1, 1, 1],
        10: [0] * 12 + [1],
    },
}


def table_poly(table: dict[int, list[int]]) -> MultiPoly:
    terms = {}
    for et, row in table.items():
        for eq, c in enumerate(row):
            if c:
                terms[(eq, et, 0)] = c
    return MultiPoly(terms)
