"""Printed reference values, transcribed verbatim and never corrected in place.

Syndrome tables are kept as (error pattern, syndrome) string pairs in their
printed row order.  In the third table a leading ``-`` before a braced fraction
negates only the first term, which is how ``e1 * w = (-1 + e1 - e2 + e3)/2``
comes out; the doubled form below records that reading.
"""

from __future__ import annotations

from importlib import resources

from .codes import ParityCheckCode, parse_code

EXAMPLE_CODES = ("ex1", "ex2", "ex3")


def example_code_text(name: str) -> str:
    if name not in EXAMPLE_CODES:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_CODES)}")
    return resources.files("quatcodes").joinpath("data", f"{name}.pcm").read_text(encoding="utf-8")


def example_code(name: str) -> ParityCheckCode:
    return parse_code(example_code_text(name), name=name)


def _gauss_rows():
    letters = ["1", "-1", "i", "-i"]
    syndromes = [
        ("1", "0"), ("-1", "0"), ("i", "0"), ("-i", "0"),
        ("0", "1"), ("0", "-1"), ("0", "i"), ("0", "-i"),
        ("1", "1"), ("-1", "-1"), ("i", "i"), ("-i", "-i"),
        ("1", "-1"), ("-1", "1"), ("i", "-i"), ("-i", "i"),
        ("i", "1"), ("-i", "-1"), ("-1", "i"), ("1", "-i"),
        ("1", "i"), ("-1", "-i"), ("i", "-1"), ("-i", "1"),
    ]
    rows = []
    idx = 0
    for pos in range(6):
        for value in letters:
            err = ["0"] * 6
            err[pos] = value
            rows.append((tuple(err), syndromes[idx]))
            idx += 1
    return tuple(rows)


TABLE_I = _gauss_rows()

TABLE_II = (
    (("1", "0", "0"), ("1",)),
    (("e1", "0", "0"), ("e1",)),
    (("e2", "0", "0"), ("e2",)),
    (("e3", "0", "0"), ("e3",)),
    (("-1", "0", "0"), ("-1",)),
    (("-e1", "0", "0"), ("-e1",)),
    (("-e2", "0", "0"), ("-e2",)),
    (("-e3", "0", "0"), ("-e3",)),
    (("0", "1", "0"), ("1+e3",)),
    (("0", "e1", "0"), ("e1-e2",)),
    (("0", "e2", "0"), ("e1+e2",)),
    (("0", "e3", "0"), ("1+e3",)),
    (("0", "-1", "0"), ("-1-e3",)),
    (("0", "-e1", "0"), ("-e1+e2",)),
    (("0", "-e2", "0"), ("-e1-e2",)),
    (("0", "-e3", "0"), ("1-e3",)),
    (("0", "0", "1"), ("1+e2",)),
    (("0", "0", "e1"), ("e1+e3",)),
    (("0", "0", "e2"), ("-1+e2",)),
    (("0", "0", "e3"), ("-e1+e3",)),
    (("0", "0", "-1"), ("-1-e2",)),
    (("0", "0", "-e1"), ("-e1-e3",)),
    (("0", "0", "-e2"), ("1-e2",)),
    (("0", "0", "-e3"), ("e1-e3",)),
)

TABLE_III = (
    (("1", "0"), ("1",)),
    (("e1", "0"), ("e1",)),
    (("e2", "0"), ("e2",)),
    (("e3", "0"), ("e3",)),
    (("-1", "0"), ("-1",)),
    (("-e1", "0"), ("-e1",)),
    (("-e2", "0"), ("-e2",)),
    (("-e3", "0"), ("-e3",)),
    (("0", "1"), ("half[1,1,1,1]",)),
    (("0", "e1"), ("half[-1,1,-1,1]",)),
    (("0", "e2"), ("half[-1,1,1,-1]",)),
    (("0", "e3"), ("half[-1,-1,1,1]",)),
    (("0", "-1"), ("half[-1,-1,-1,-1]",)),
    (("0", "-e1"), ("half[1,-1,1,-1]",)),
    (("0", "-e2"), ("half[1,-1,-1,1]",)),
    (("0", "-e3"), ("half[1,1,-1,-1]",)),
)

SYNDROME_TABLES = {"I": ("ex1", TABLE_I), "II": ("ex2", TABLE_II), "III": ("ex3", TABLE_III)}

# printed verdicts and minimum distances of the example codes
EXAMPLE_VERDICTS = {"ex1": "Perfect", "ex2": "Perfect", "ex3": "Perfect"}
EXAMPLE_MIN_DISTANCE = {"ex1": 3, "ex2": 3}

# Printed (n, k) solution lists of the sphere-packing equalities, keyed by
# (bound case id, fixed p or None when the list mixes primes).
SOLUTION_LISTS: dict[tuple[str, int | None], tuple[tuple[int, int], ...]] = {
    ("mannheim-t1", None): ((3, 2), (4, 3), (6, 4), (7, 6), (9, 8), (31, 28), (42, 40), (549, 546)),
    ("mannheim-t1", 5): ((6, 4),),
    ("mannheim-t2", None): (
        (3, 2), (6, 4), (12, 11), (15, 14), (18, 17), (21, 20), (33, 32), (204, 202),
    ),
    ("lipschitz-t1", None): ((3, 2), (6, 5), (10, 8), (15, 14), (21, 20), (3570, 3568)),
    ("lipschitz-t1", 5): ((3, 2), (1953, 1950)),
    ("lipschitz-t2", 29): ((5, 4),),
    ("lipschitz-t2", 33461): ((5915, 5914),),
    ("hurwitz-lipschitz-t1", 3): ((2, 1), (36, 34), (614, 611), (10440, 10436), (177482, 177477)),
    ("hurwitz-lipschitz-t1", 5): ((6, 5), (300, 298), (14706, 14703), (720600, 720596)),
    ("hurwitz-lipschitz-t1", 7): ((12, 11), (1176, 1174), (114084, 114081)),
    ("hurwitz-t1", 3): ((83520, 83516), (6975757440, 6975757432)),
    ("hurwitz-t1", 5): ((2400, 2398), (5764800, 5764796)),
}

# Cases printed as having no feasible (n >= 2, k >= 1) solution, with the
# printed scan limits where one was stated.
NONEXISTENCE = {
    "mannheim-t2-p5": None,
    "lipschitz-t2-p3": None,
    "lipschitz-t2-p5": None,
    "lipschitz-t2-p7-p11": None,
    "hurwitz-lipschitz-t2-p3": None,
    "hurwitz-lipschitz-t2-p5": None,
    "hurwitz-lipschitz-t2-p7-p11": None,
    "hurwitz-t2-p3": None,
    "hurwitz-lipschitz-t2": {"n_max": 10**6},
    "hurwitz-t2": {"n_max": 10**6, "r_max": 23},
}
