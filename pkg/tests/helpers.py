"""Shared golden data and independent brute-force oracles.

Expected values here were fixed by hand application of the definitions or
by the small independent procedures below, never by running the code under
test.
"""

from math import comb
from itertools import product

from tiptree import Label, Match, MatchSet

# --- four-edge catalog: shapes, their (i,k) pairs, and the phi pairing ------

FOUR_EDGE_TREES = [
    "(()(()()))",
    "(()(())())",
    "(()()(()))",
    "(()()()())",
]
FOUR_EDGE_IK = {
    "(()(()()))": (0, 1),
    "(()(())())": (1, 1),
    "(()()(()))": (1, 0),
    "(()()()())": (0, 0),
}
FOUR_EDGE_FIXED = ["(()(())())", "(()()()())"]
FOUR_EDGE_SWAPPED = [("(()()(()))", "(()(()()))")]

# --- five-edge catalog: three fixed points and three transpositions ---------

FIVE_EDGE_FIXED = {
    "(()()()()())": (0, 0),
    "(()(())()())": (1, 1),
    "(()()(()()))": (0, 0),
}
FIVE_EDGE_SWAPPED = [
    ("(()()(())())", "(()(()())())", (1, 0), (0, 1)),
    ("(()()()(()))", "(()(()()()))", (1, 0), (0, 1)),
    ("(()(())(()))", "(()(()(())))", (2, 1), (1, 2)),
]

# --- distribution tables, classified by hand ---------------------------------

TABLE_2 = {(0, 1, 0, 0, 1): 1}
TABLE_3 = {(0, 1, 0, 1, 1): 1, (1, 0, 1, 0, 0): 1}
TABLE_4 = {
    (0, 1, 0, 2, 1): 1,
    (1, 0, 1, 1, 0): 1,
    (1, 1, 0, 0, 1): 1,
    (0, 1, 1, 0, 1): 1,
}
TABLE_5 = {
    (0, 1, 0, 3, 1): 1,
    (1, 0, 1, 2, 0): 1,
    (0, 2, 0, 0, 2): 1,
    (1, 1, 0, 1, 1): 2,
    (0, 1, 1, 1, 1): 2,
    (2, 0, 1, 0, 0): 1,
    (1, 0, 2, 0, 0): 1,
}

# --- eleven-edge labelled pair and its match rows ----------------------------
#
# The two match rows are flips of each other on the doubly-marked matches;
# each tree decomposes to one row and the flipped row merges to the other
# tree.

ELEVEN_TREE_A = "10(3,1(8,5),9,7(6,2(4,12(11))))"
ELEVEN_TREE_B = "12(11,2(4),7(6),1(8,5,10(3),9))"
ELEVEN_ROW_A = "1:8,13*:5,2:4,7:6,10:3,17*:14*,18*:9,12:11,15*:20*,16*:21*,19*:22*"
ELEVEN_ROW_B = "1:8,13*:5,2:4,7:6,10:3,14*:17*,18*:9,12:11,20*:15*,21*:16*,22*:19*"
ELEVEN_STATS_A = (1, 1, 3, 1, 1)
ELEVEN_STATS_B = (3, 1, 1, 1, 1)

# --- seventeen-edge labelled correspondence pair ------------------------------

SEVENTEEN_IN = "1(2,3(4),5(6),7(8),9(10,11(12)),13,14(15,16,17(18)))"
SEVENTEEN_OUT = "1(8,7(6,5(4,3(2))),9(12,11(10)),13,14(18,17(15,16)))"


def catalan(n: int) -> int:
    """Closed-form Catalan number, independent of any generator."""
    return comb(2 * n, n) // (n + 1)


def motzkin_by_sum(k: int) -> int:
    """Motzkin number via the binomial-Catalan sum, independent of the
    recurrence implementation."""
    return sum(comb(k, 2 * j) * catalan(j) for j in range(k // 2 + 1))


def all_match_sets(n: int):
    """Every way to pair {1..n+1, (n+2)*..(2n)*} into n oriented matches."""
    labels = [Label(v) for v in range(1, n + 2)]
    labels += [Label(v, True) for v in range(n + 2, 2 * n + 1)]

    def pairings(items):
        if not items:
            yield []
            return
        first = items[0]
        for idx in range(1, len(items)):
            partner = items[idx]
            rest = items[1:idx] + items[idx + 1 :]
            for tail in pairings(rest):
                yield [(first, partner)] + tail

    for pairing in pairings(labels):
        for orientation in product((0, 1), repeat=n):
            matches = [
                Match(a, b) if bit == 0 else Match(b, a)
                for (a, b), bit in zip(pairing, orientation)
            ]
            yield MatchSet.from_matches(matches)
