"""Frozen reference matrices for the cataloged diagrams.

Each entry is (B, den, N) with B the expected Gram matrix and B^-1 = N/den,
transcribed independently of the catalog construction so the test compares
two routes: diagram edge lists vs these grids, and exact inversion vs the
tabulated inverse.
"""

TABLES = {
    "D4(a1)": (
        [[2, 0, -1, -1],
         [0, 2, 1, -1],
         [-1, 1, 2, 0],
         [-1, -1, 0, 2]],
        2,
        [[2, 0, 1, 1],
         [0, 2, -1, 1],
         [1, -1, 2, 0],
         [1, 1, 0, 2]],
    ),
    "D5(a1)": (
        [[2, 0, 0, -1, 0],
         [0, 2, 0, -1, 1],
         [0, 0, 2, -1, -1],
         [-1, -1, -1, 2, 0],
         [0, 1, -1, 0, 2]],
        4,
        [[4, 2, 2, 4, 0],
         [2, 5, 1, 4, -2],
         [2, 1, 5, 4, 2],
         [4, 4, 4, 8, 0],
         [0, -2, 2, 0, 4]],
    ),
    "E6(a1)": (
        [[2, 0, 0, -1, 0, 0],
         [0, 2, 0, -1, 1, 0],
         [0, 0, 2, -1, -1, -1],
         [-1, -1, -1, 2, 0, 0],
         [0, 1, -1, 0, 2, 0],
         [0, 0, -1, 0, 0, 2]],
        3,
        [[4, 2, 4, 5, 1, 2],
         [2, 4, 2, 4, -1, 1],
         [4, 2, 10, 8, 4, 5],
         [5, 4, 8, 10, 2, 4],
         [1, -1, 4, 2, 4, 2],
         [2, 1, 5, 4, 2, 4]],
    ),
    "E6(a2)": (
        [[2, 0, 0, -1, 0, 1],
         [0, 2, 0, -1, 1, 0],
         [0, 0, 2, -1, -1, -1],
         [-1, -1, -1, 2, 0, 0],
         [0, 1, -1, 0, 2, 0],
         [1, 0, -1, 0, 0, 2]],
        3,
        [[4, 2, 0, 3, -1, -2],
         [2, 4, 0, 3, -2, -1],
         [0, 0, 6, 3, 3, 3],
         [3, 3, 3, 6, 0, 0],
         [-1, -2, 3, 0, 4, 2],
         [-2, -1, 3, 0, 2, 4]],
    ),
    "D6(a1)": (
        [[2, 0, 0, -1, 0, -1],
         [0, 2, 0, -1, 1, 0],
         [0, 0, 2, -1, -1, 0],
         [-1, -1, -1, 2, 0, 0],
         [0, 1, -1, 0, 2, 0],
         [-1, 0, 0, 0, 0, 2]],
        2,
        [[4, 2, 2, 4, 0, 2],
         [2, 3, 1, 3, -1, 1],
         [2, 1, 3, 3, 1, 1],
         [4, 3, 3, 6, 0, 2],
         [0, -1, 1, 0, 2, 0],
         [2, 1, 1, 2, 0, 2]],
    ),
    "D6(a2)": (
        [[2, 0, 0, 0, -1, 0],
         [0, 2, 0, 0, -1, 1],
         [0, 0, 2, 0, -1, -1],
         [0, 0, 0, 2, 0, -1],
         [-1, -1, -1, 0, 2, 0],
         [0, 1, -1, -1, 0, 2]],
        2,
        [[2, 1, 1, 0, 2, 0],
         [1, 3, 0, -1, 2, -2],
         [1, 0, 3, 1, 2, 2],
         [0, -1, 1, 2, 0, 2],
         [2, 2, 2, 0, 4, 0],
         [0, -2, 2, 2, 0, 4]],
    ),
    "E7(a1)": (
        [[2, 0, 0, -1, 0, 0, -1],
         [0, 2, 0, -1, 1, 0, 0],
         [0, 0, 2, -1, -1, -1, 0],
         [-1, -1, -1, 2, 0, 0, 0],
         [0, 1, -1, 0, 2, 0, 0],
         [0, 0, -1, 0, 0, 2, 0],
         [-1, 0, 0, 0, 0, 0, 2]],
        2,
        [[8, 4, 8, 10, 2, 4, 4],
         [4, 4, 4, 6, 0, 2, 2],
         [8, 4, 12, 12, 4, 6, 4],
         [10, 6, 12, 15, 3, 6, 5],
         [2, 0, 4, 3, 3, 2, 1],
         [4, 2, 6, 6, 2, 4, 2],
         [4, 2, 4, 5, 1, 2, 3]],
    ),
    "E7(a2)": (
        [[2, 0, 0, -1, 0, 0, 0],
         [0, 2, 0, -1, 1, 0, -1],
         [0, 0, 2, -1, -1, -1, 0],
         [-1, -1, -1, 2, 0, 0, 0],
         [0, 1, -1, 0, 2, 0, 0],
         [0, 0, -1, 0, 0, 2, 0],
         [0, -1, 0, 0, 0, 0, 2]],
        2,
        [[4, 4, 4, 6, 0, 2, 2],
         [4, 8, 4, 8, -2, 2, 4],
         [4, 4, 8, 8, 2, 4, 2],
         [6, 8, 8, 12, 0, 4, 4],
         [0, -2, 2, 0, 3, 1, -1],
         [2, 2, 4, 4, 1, 3, 1],
         [2, 4, 2, 4, -1, 1, 3]],
    ),
    "E7(a3)": (
        [[2, 0, 0, -1, 0, 1, 0],
         [0, 2, 0, -1, 1, 0, -1],
         [0, 0, 2, -1, -1, -1, 0],
         [-1, -1, -1, 2, 0, 0, 0],
         [0, 1, -1, 0, 2, 0, 0],
         [1, 0, -1, 0, 0, 2, 0],
         [0, -1, 0, 0, 0, 0, 2]],
        2,
        [[4, 4, 0, 4, -2, -2, 2],
         [4, 8, 0, 6, -4, -2, 4],
         [0, 0, 4, 2, 2, 2, 0],
         [4, 6, 2, 7, -2, -1, 3],
         [-2, -4, 2, -2, 4, 2, -2],
         [-2, -2, 2, -1, 2, 3, -1],
         [2, 4, 0, 3, -2, -1, 3]],
    ),
    "E7(a4)": (
        [[2, 0, 0, -1, 0, -1, 1],
         [0, 2, 0, -1, 1, 0, -1],
         [0, 0, 2, -1, -1, 1, 0],
         [-1, -1, -1, 2, 0, 0, 0],
         [0, 1, -1, 0, 2, 0, 0],
         [-1, 0, 1, 0, 0, 2, 0],
         [1, -1, 0, 0, 0, 0, 2]],
        2,
        [[4, 0, 0, 2, 0, 2, -2],
         [0, 4, 0, 2, -2, 0, 2],
         [0, 0, 4, 2, 2, -2, 0],
         [2, 2, 2, 4, 0, 0, 0],
         [0, -2, 2, 0, 3, -1, -1],
         [2, 0, -2, 0, -1, 3, -1],
         [-2, 2, 0, 0, -1, -1, 3]],
    ),
    "D7(a1)": (
        [[2, 0, 0, 0, -1, 0, -1],
         [0, 2, 0, 0, -1, 1, 0],
         [0, 0, 2, 0, -1, -1, 0],
         [0, 0, 0, 2, 0, 0, -1],
         [-1, -1, -1, 0, 2, 0, 0],
         [0, 1, -1, 0, 0, 2, 0],
         [-1, 0, 0, -1, 0, 0, 2]],
        4,
        [[12, 6, 6, 4, 12, 0, 8],
         [6, 7, 3, 2, 8, -2, 4],
         [6, 3, 7, 2, 8, 2, 4],
         [4, 2, 2, 4, 4, 0, 4],
         [12, 8, 8, 4, 16, 0, 8],
         [0, -2, 2, 0, 0, 4, 0],
         [8, 4, 4, 4, 8, 0, 8]],
    ),
    "D7(a2)": (
        [[2, 0, 0, 0, -1, 0, -1],
         [0, 2, 0, 0, -1, 1, 0],
         [0, 0, 2, 0, -1, -1, 0],
         [0, 0, 0, 2, 0, -1, 0],
         [-1, -1, -1, 0, 2, 0, 0],
         [0, 1, -1, -1, 0, 2, 0],
         [-1, 0, 0, 0, 0, 0, 2]],
        4,
        [[8, 4, 4, 0, 8, 0, 4],
         [4, 7, 1, -2, 6, -4, 2],
         [4, 1, 7, 2, 6, 4, 2],
         [0, -2, 2, 4, 0, 4, 0],
         [8, 6, 6, 0, 12, 0, 4],
         [0, -4, 4, 4, 0, 8, 0],
         [4, 2, 2, 0, 4, 0, 4]],
    ),
    "D4": (
        [[2, 0, 0, -1],
         [0, 2, 0, -1],
         [0, 0, 2, -1],
         [-1, -1, -1, 2]],
        2,
        [[2, 1, 1, 2],
         [1, 2, 1, 2],
         [1, 1, 2, 2],
         [2, 2, 2, 4]],
    ),
    "D5": (
        [[2, 0, 0, -1, 0],
         [0, 2, 0, -1, -1],
         [0, 0, 2, -1, 0],
         [-1, -1, -1, 2, 0],
         [0, -1, 0, 0, 2]],
        4,
        [[5, 4, 3, 6, 2],
         [4, 8, 4, 8, 4],
         [3, 4, 5, 6, 2],
         [6, 8, 6, 12, 4],
         [2, 4, 2, 4, 4]],
    ),
    "E6": (
        [[2, 0, 0, -1, -1, 0],
         [0, 2, 0, -1, 0, -1],
         [0, 0, 2, -1, 0, 0],
         [-1, -1, -1, 2, 0, 0],
         [-1, 0, 0, 0, 2, 0],
         [0, -1, 0, 0, 0, 2]],
        3,
        [[10, 8, 6, 12, 5, 4],
         [8, 10, 6, 12, 4, 5],
         [6, 6, 6, 9, 3, 3],
         [12, 12, 9, 18, 6, 6],
         [5, 4, 3, 6, 4, 2],
         [4, 5, 3, 6, 2, 4]],
    ),
    "D6": (
        [[2, 0, 0, 0, -1, 0],
         [0, 2, 0, 0, -1, -1],
         [0, 0, 2, 0, -1, 0],
         [0, 0, 0, 2, 0, -1],
         [-1, -1, -1, 0, 2, 0],
         [0, -1, 0, -1, 0, 2]],
        2,
        [[3, 3, 2, 1, 4, 2],
         [3, 6, 3, 2, 6, 4],
         [2, 3, 3, 1, 4, 2],
         [1, 2, 1, 2, 2, 2],
         [4, 6, 4, 2, 8, 4],
         [2, 4, 2, 2, 4, 4]],
    ),
    "E7": (
        [[2, 0, 0, 0, -1, -1, 0],
         [0, 2, 0, 0, -1, 0, -1],
         [0, 0, 2, 0, -1, 0, 0],
         [0, 0, 0, 2, 0, 0, -1],
         [-1, -1, -1, 0, 2, 0, 0],
         [-1, 0, 0, 0, 0, 2, 0],
         [0, -1, 0, -1, 0, 0, 2]],
        2,
        [[12, 12, 8, 4, 16, 6, 8],
         [12, 15, 9, 5, 18, 6, 10],
         [8, 9, 7, 3, 12, 4, 6],
         [4, 5, 3, 3, 6, 2, 4],
         [16, 18, 12, 6, 24, 8, 12],
         [6, 6, 4, 2, 8, 4, 4],
         [8, 10, 6, 4, 12, 4, 8]],
    ),
    "D7": (
        [[2, 0, 0, 0, -1, 0, 0],
         [0, 2, 0, 0, -1, -1, 0],
         [0, 0, 2, 0, -1, 0, 0],
         [0, 0, 0, 2, 0, -1, -1],
         [-1, -1, -1, 0, 2, 0, 0],
         [0, -1, 0, -1, 0, 2, 0],
         [0, 0, 0, -1, 0, 0, 2]],
        4,
        [[7, 8, 5, 4, 10, 6, 2],
         [8, 16, 8, 8, 16, 12, 4],
         [5, 8, 7, 4, 10, 6, 2],
         [4, 8, 4, 8, 8, 8, 4],
         [10, 16, 10, 8, 20, 12, 4],
         [6, 12, 6, 8, 12, 12, 4],
         [2, 4, 2, 4, 4, 4, 4]],
    ),
}
