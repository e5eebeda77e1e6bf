"""
Worked examples transcribed by hand: the five-element relation with its
32 approximation rows and 18-node Hasse diagram, and the four-element
relation with its exact sets.
"""
from fractions import Fraction

H = Fraction(1, 2)

FIVE_LABELS = ["a", "b", "c", "d", "e"]
FIVE_ROWS = [
    ["1", "1", "0.5", "0", "0"],
    ["1", "1", "0.5", "0", "0"],
    ["0.5", "0.5", "1", "0", "0"],
    ["0", "0", "0", "1", "1"],
    ["0", "0", "0", "1", "1"],
]

FOUR_LABELS = ["a", "b", "c", "d"]
FOUR_ROWS = [
    ["1", "1", "0.3", "0"],
    ["1", "1", "0.3", "0"],
    ["0.3", "0.3", "1", "0"],
    ["0", "0", "0", "1"],
]


def _v(*xs):
    return tuple(Fraction(x) for x in xs)


# (A, A_E, A^E, lower membership, upper membership); "U" is the whole universe
_U = "abcde"
FIVE_APPROXIMATIONS = [
    ("", "", "", _v(0, 0, 0, 0, 0), _v(0, 0, 0, 0, 0)),
    ("a", "", "ab", _v(0, 0, 0, 0, 0), _v(1, 1, H, 0, 0)),
    ("b", "", "ab", _v(0, 0, 0, 0, 0), _v(1, 1, H, 0, 0)),
    ("c", "c", "c", _v(0, 0, H, 0, 0), _v(H, H, 1, 0, 0)),
    ("d", "", "de", _v(0, 0, 0, 0, 0), _v(0, 0, 0, 1, 1)),
    ("e", "", "de", _v(0, 0, 0, 0, 0), _v(0, 0, 0, 1, 1)),
    ("ab", "ab", "ab", _v(H, H, 0, 0, 0), _v(1, 1, H, 0, 0)),
    ("ac", "c", "abc", _v(0, 0, H, 0, 0), _v(1, 1, 1, 0, 0)),
    ("ad", "", "abde", _v(0, 0, 0, 0, 0), _v(1, 1, H, 1, 1)),
    ("ae", "", "abde", _v(0, 0, 0, 0, 0), _v(1, 1, H, 1, 1)),
    ("bc", "c", "abc", _v(0, 0, H, 0, 0), _v(1, 1, 1, 0, 0)),
    ("bd", "", "abde", _v(0, 0, 0, 0, 0), _v(1, 1, H, 1, 1)),
    ("be", "", "abde", _v(0, 0, 0, 0, 0), _v(1, 1, H, 1, 1)),
    ("cd", "c", "cde", _v(0, 0, H, 0, 0), _v(H, H, 1, 1, 1)),
    ("ce", "c", "cde", _v(0, 0, H, 0, 0), _v(H, H, 1, 1, 1)),
    ("de", "de", "de", _v(0, 0, 0, 1, 1), _v(0, 0, 0, 1, 1)),
    ("abc", "abc", "abc", _v(1, 1, 1, 0, 0), _v(1, 1, 1, 0, 0)),
    ("abd", "ab", "abde", _v(H, H, 0, 0, 0), _v(1, 1, H, 1, 1)),
    ("abe", "ab", "abde", _v(H, H, 0, 0, 0), _v(1, 1, H, 1, 1)),
    ("acd", "c", _U, _v(0, 0, H, 0, 0), _v(1, 1, 1, 1, 1)),
    ("ace", "c", _U, _v(0, 0, H, 0, 0), _v(1, 1, 1, 1, 1)),
    ("ade", "de", "abde", _v(0, 0, 0, 1, 1), _v(1, 1, H, 1, 1)),
    ("bcd", "c", _U, _v(0, 0, H, 0, 0), _v(1, 1, 1, 1, 1)),
    ("bce", "c", _U, _v(0, 0, H, 0, 0), _v(1, 1, 1, 1, 1)),
    ("bde", "de", "abde", _v(0, 0, 0, 1, 1), _v(1, 1, H, 1, 1)),
    ("cde", "cde", "cde", _v(0, 0, H, 1, 1), _v(H, H, 1, 1, 1)),
    ("abcd", "abc", _U, _v(1, 1, 1, 0, 0), _v(1, 1, 1, 1, 1)),
    ("abce", "abc", _U, _v(1, 1, 1, 0, 0), _v(1, 1, 1, 1, 1)),
    ("abde", "abde", "abde", _v(H, H, 0, 1, 1), _v(1, 1, H, 1, 1)),
    ("acde", "cde", _U, _v(0, 0, H, 1, 1), _v(1, 1, 1, 1, 1)),
    ("bcde", "cde", _U, _v(0, 0, H, 1, 1), _v(1, 1, 1, 1, 1)),
    (_U, _U, _U, _v(1, 1, 1, 1, 1), _v(1, 1, 1, 1, 1)),
]

# Hasse diagram nodes as (upper row, lower row)
HASSE_NODES = {
    "min": (_v(0, 0, 0, 0, 0), _v(0, 0, 0, 0, 0)),
    "a1": (_v(1, 1, H, 0, 0), _v(0, 0, 0, 0, 0)),
    "a2": (_v(H, H, 1, 0, 0), _v(0, 0, H, 0, 0)),
    "a3": (_v(0, 0, 0, 1, 1), _v(0, 0, 0, 0, 0)),
    "b1": (_v(1, 1, H, 0, 0), _v(H, H, 0, 0, 0)),
    "b2": (_v(1, 1, 1, 0, 0), _v(0, 0, H, 0, 0)),
    "b3": (_v(1, 1, H, 1, 1), _v(0, 0, 0, 0, 0)),
    "b4": (_v(H, H, 1, 1, 1), _v(0, 0, H, 0, 0)),
    "b5": (_v(0, 0, 0, 1, 1), _v(0, 0, 0, 1, 1)),
    "c1": (_v(1, 1, 1, 0, 0), _v(1, 1, 1, 0, 0)),
    "c2": (_v(1, 1, H, 1, 1), _v(H, H, 0, 0, 0)),
    "c3": (_v(1, 1, 1, 1, 1), _v(0, 0, H, 0, 0)),
    "c4": (_v(1, 1, H, 1, 1), _v(0, 0, 0, 1, 1)),
    "c5": (_v(H, H, 1, 1, 1), _v(0, 0, H, 1, 1)),
    "d1": (_v(1, 1, 1, 1, 1), _v(1, 1, 1, 0, 0)),
    "d2": (_v(1, 1, H, 1, 1), _v(H, H, 0, 1, 1)),
    "d3": (_v(1, 1, 1, 1, 1), _v(0, 0, H, 1, 1)),
    "max": (_v(1, 1, 1, 1, 1), _v(1, 1, 1, 1, 1)),
}

HASSE_EDGES = [
    ("min", "a1"), ("min", "a2"), ("min", "a3"),
    ("a1", "b1"), ("a1", "b2"), ("a1", "b3"),
    ("a2", "b2"), ("a2", "b4"),
    ("a3", "b3"), ("a3", "b4"), ("a3", "b5"),
    ("b1", "c1"), ("b1", "c2"),
    ("b2", "c1"), ("b2", "c3"),
    ("b3", "c2"), ("b3", "c3"), ("b3", "c4"),
    ("b4", "c3"), ("b4", "c5"),
    ("b5", "c4"), ("b5", "c5"),
    ("c1", "d1"),
    ("c2", "d1"), ("c2", "d2"),
    ("c3", "d1"), ("c3", "d3"),
    ("c4", "d2"), ("c4", "d3"),
    ("c5", "d3"),
    ("d1", "max"), ("d2", "max"), ("d3", "max"),
]

# exact reference sets of the four-element relation with their common membership
FOUR_EXACT = [
    ("", _v(0, 0, 0, 0)),
    ("d", _v(0, 0, 0, 1)),
    ("abc", _v(1, 1, 1, 0)),
    ("abcd", _v(1, 1, 1, 1)),
]
