"""Hard-coded starters and explicit factorizations for small special cases.

Vertex labels follow the rotational set-up: integers are residues mod n-1
and ``I`` is the fixed point.  Entries are transcribed verbatim; the test
suite expands every one of them and certifies the result.
"""

from __future__ import annotations

from .core import INF as I

# type -> (q, starters); each starter is a list of cycles
STARTERS = {
    # single starters (q = 1)
    (4, 5): (1, [[[0, 1, 5, 3], [2, 4, 7, 6, I]]]),
    (2, 2, 2, 4): (1, [[[0, I], [1, 3], [5, 6], [2, 7, 4, 8]]]),
    (2, 4, 6): (1, [[[0, I], [3, 7, 9, 8], [1, 2, 5, 10, 6, 4]]]),
    (2, 3, 3): (1, [[[0, I], [1, 2, 4], [6, 5, 3]]]),
    (2, 2, 3, 3): (1, [[[0, I], [2, 7], [1, 3, 4], [5, 8, 6]]]),
    (2, 2, 2, 3, 3): (1, [[[0, I], [1, 4], [5, 6], [3, 10, 8], [2, 7, 9]]]),
    (2, 2, 2, 2, 3, 3): (1, [[[0, I], [6, 7], [1, 5], [2, 12], [3, 10, 8], [4, 9, 11]]]),
    (2, 2, 2, 2, 2, 3, 3): (
        1,
        [[[0, I], [4, 8], [7, 12], [3, 6], [9, 11], [1, 10, 2], [5, 13, 14]]],
    ),
    (2, 2, 6): (1, [[[0, I], [1, 6], [2, 3, 5, 8, 7, 4]]]),
    (2, 2, 2, 6): (1, [[[0, I], [1, 6], [7, 10], [2, 3, 5, 9, 8, 4]]]),
    (2, 2, 2, 2, 6): (1, [[[0, I], [1, 6], [3, 9], [12, 2], [4, 5, 7, 11, 10, 8]]]),
    (2, 3, 4): (1, [[[1, 7], [0, 4, I], [2, 3, 6, 5]]]),
    (2, 3, 5): (1, [[[0, I], [2, 3, 5], [1, 6, 4, 8, 7]]]),
    (2, 4, 4): (1, [[[0, I], [1, 7, 5, 6], [2, 4, 3, 8]]]),
    (2, 4, 5): (1, [[[1, 2], [3, I, 8, 6], [0, 4, 7, 9, 5]]]),
    (3, 3, 5): (1, [[[0, I, 5], [3, 4, 6], [1, 9, 2, 8, 7]]]),
    (2, 2, 3, 4): (1, [[[1, 9], [2, 8], [0, I, 5], [3, 4, 7, 6]]]),
    (2, 3, 3, 3): (1, [[[3, 7], [0, I, 5], [1, 2, 4], [6, 9, 8]]]),
    (2, 5, 5): (1, [[[0, I], [1, 8, 2, 4, 3], [5, 9, 6, 7, 10]]]),
    (2, 2, 3, 5): (1, [[[0, I], [5, 6], [2, 7, 4], [1, 8, 10, 3, 9]]]),
    (2, 3, 3, 4): (1, [[[0, I], [1, 5, 2], [4, 10, 8], [3, 6, 7, 9]]]),
    (2, 5, 6): (1, [[[3, 6], [0, 7, 5, 11, 1], [2, 10, I, 4, 8, 9]]]),
    (2, 2, 3, 6): (1, [[[5, 7], [10, 11], [1, 4, 8], [0, I, 6, 2, 9, 3]]]),
    (2, 2, 4, 5): (1, [[[0, 11], [1, 5], [2, 7, 10, 4], [3, I, 9, 6, 8]]]),
    (2, 3, 3, 5): (1, [[[2, 4], [0, 1, 7], [3, 10, 6], [5, 9, 8, 11, I]]]),
    (2, 3, 4, 4): (1, [[[6, 9], [1, 8, 2], [0, 10, 3, 4], [5, 7, 11, I]]]),
    (2, 2, 2, 3, 4): (1, [[[1, 10], [4, 11], [5, 6], [3, 7, 9], [0, 8, I, 2]]]),
    (2, 2, 3, 3, 3): (1, [[[0, 5], [4, 6], [1, 10, 2], [3, 9, I], [7, 8, 11]]]),
    # three starters (q = 3)
    (4, 6): (
        3,
        [
            [[1, 5, 8, 6], [0, 2, 4, 3, I, 7]],
            [[2, 7, 3, 6], [0, 8, 5, 4, 1, I]],
            [[0, 7, 1, 8], [2, 6, 3, 4, 5, I]],
        ],
    ),
    (3, 3, 4): (
        3,
        [
            [[0, 5, 2], [1, I, 3], [4, 6, 8, 7]],
            [[0, 3, 4], [5, 6, I], [1, 8, 2, 7]],
            [[2, 4, 3], [7, 8, I], [0, 6, 1, 5]],
        ],
    ),
}

# type -> full list of n-1 factors, no symmetry
EXPLICIT = {
    (4, 8): [
        [[3, 10, 4, I], [0, 2, 9, 5, 1, 7, 6, 8]],
        [[1, 4, 7, 3], [0, I, 5, 9, 2, 10, 8, 6]],
        [[0, 7, 5, 3], [1, 2, I, 9, 10, 6, 4, 8]],
        [[3, 8, 4, 6], [0, 5, 10, 2, 1, 9, I, 7]],
        [[0, 3, I, 1], [2, 6, 9, 8, 7, 10, 5, 4]],
        [[0, 10, 3, 9], [1, 5, 8, I, 6, 7, 2, 4]],
        [[0, 8, 10, I], [1, 3, 4, 5, 6, 2, 7, 9]],
        [[3, 5, 7, 8], [0, 9, 4, 10, 1, 6, I, 2]],
        [[4, 9, 7, I], [0, 1, 8, 5, 2, 3, 6, 10]],
        [[2, 5, I, 8], [0, 6, 1, 10, 9, 3, 7, 4]],
        [[1, I, 10, 7], [0, 4, 3, 2, 8, 9, 6, 5]],
    ],
    (3, 3, 6): [
        [[3, I, 10], [4, 6, 7], [0, 8, 9, 2, 5, 1]],
        [[1, 2, 10], [3, 6, 8], [0, 4, 7, 9, I, 5]],
        [[1, 10, 4], [7, I, 8], [0, 6, 2, 9, 5, 3]],
        [[0, 10, 9], [7, 8, I], [1, 5, 4, 2, 6, 3]],
        [[1, 6, I], [5, 9, 7], [0, 3, 2, 8, 4, 10]],
        [[4, 5, I], [3, 10, 7], [0, 2, 1, 9, 8, 6]],
        [[2, 7, 10], [4, 9, 6], [0, 1, I, 3, 5, 8]],
        [[2, 3, 7], [5, 10, 8], [0, I, 6, 9, 1, 4]],
        [[3, 9, 4], [5, 6, 10], [0, 7, 1, 8, 2, I]],
        [[1, 3, 8], [2, 4, I], [0, 9, 10, 6, 5, 7]],
        [[0, 5, 2], [1, 7, 6], [3, 4, 8, 10, I, 9]],
    ],
    (3, 4, 5): [
        [[9, 10, I], [3, 7, 4, 5], [0, 6, 8, 1, 2]],
        [[7, 9, I], [0, 10, 3, 8], [1, 4, 6, 5, 2]],
        [[2, 7, 10], [1, I, 4, 9], [0, 8, 6, 3, 5]],
        [[1, 9, 4], [2, 10, 8, 7], [0, 5, 6, I, 3]],
        [[0, 2, I], [5, 9, 8, 10], [1, 6, 4, 7, 3]],
        [[5, 10, 9], [2, 3, 4, 8], [0, I, 6, 1, 7]],
        [[2, 8, 4], [0, 3, 9, 6], [1, 5, 7, I, 10]],
        [[2, 9, 3], [1, 8, 5, I], [0, 7, 6, 10, 4]],
        [[3, I, 8], [2, 4, 10, 6], [0, 9, 7, 5, 1]],
        [[1, 10, 7], [2, 5, 8, I], [0, 4, 3, 6, 9]],
        [[4, I, 5], [0, 1, 3, 10], [2, 6, 7, 8, 9]],
    ],
}
