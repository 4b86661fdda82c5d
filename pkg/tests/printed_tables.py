"""Printed triangles, keyed (n, k) for 1 <= k <= n <= 7."""

P2_COLUMNS = {
    1: [1],
    2: [1, 1],
    3: [1, 1, 2],
    4: [1, 2, 2, 4],
    5: [1, 2, 4, 4, 9],
    6: [1, 3, 8, 8, 9, 20],
    7: [1, 3, 10, 16, 18, 20, 49],
}

P1_COLUMNS = {
    1: [1],
    2: [1, 1],
    3: [1, 1, 1],
    4: [1, 2, 1, 1],
    5: [1, 2, 2, 1, 1],
    6: [1, 3, 3, 2, 1, 1],
    7: [1, 3, 4, 3, 2, 1, 1],
}

B_PRINTED = [1, 1, 2, 4, 9, 20]


def entries(columns):
    return {(n, k): v for n, col in columns.items() for k, v in enumerate(col, start=1)}
