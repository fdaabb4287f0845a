"""Arrangements used across the test modules, plus golden tables."""

from __future__ import annotations

from hyperarr import (
    braid_arrangement,
    coordinate_arrangement,
    dihedral_arrangement,
)

# The two coordinate lines with forms x1, x2 and positive half-axes as positive sides.
SAL_TWO_LINES = {
    ("++", "++"), ("-+", "-+"), ("--", "--"), ("+-", "+-"),
    ("0+", "++"), ("0+", "-+"), ("-0", "--"), ("0-", "+-"),
    ("+0", "++"), ("-0", "-+"), ("0-", "--"), ("+0", "+-"),
    ("00", "++"), ("00", "-+"), ("00", "--"), ("00", "+-"),
}

# (F,C) <-> F^C for the same arrangement; j stands for -i.
COMPLEX_TABLE_TWO_LINES = {
    ("++", "++"): "++",
    ("0+", "++"): "i+",
    ("+0", "++"): "+i",
    ("00", "++"): "ii",
    ("-+", "-+"): "-+",
    ("0+", "-+"): "j+",
    ("-0", "-+"): "-i",
    ("00", "-+"): "ji",
    ("--", "--"): "--",
    ("-0", "--"): "-j",
    ("0-", "--"): "j-",
    ("00", "--"): "jj",
    ("+-", "+-"): "+-",
    ("0-", "+-"): "i-",
    ("+0", "+-"): "+j",
    ("00", "+-"): "ij",
}


def line():
    """One hyperplane in R^1."""
    return coordinate_arrangement(1)


# name -> constructor; every entry is essential
ESSENTIAL = {
    "line": line,
    "coords": coordinate_arrangement,
    "braid2e": lambda: braid_arrangement(2, essentialize=True),
    "braid3e": lambda: braid_arrangement(3, essentialize=True),
    "braid4e": lambda: braid_arrangement(4, essentialize=True),
    "dihedral2": lambda: dihedral_arrangement(2),
    "dihedral3": lambda: dihedral_arrangement(3),
    "dihedral4": lambda: dihedral_arrangement(4),
    "dihedral5": lambda: dihedral_arrangement(5),
    "dihedral6": lambda: dihedral_arrangement(6),
}

RANK2_REFLECTION = {
    "coords": (coordinate_arrangement, 2),
    "braid3e": (lambda: braid_arrangement(3, essentialize=True), 3),
    "dihedral4": (lambda: dihedral_arrangement(4), 4),
    "dihedral5": (lambda: dihedral_arrangement(5), 5),
    "dihedral6": (lambda: dihedral_arrangement(6), 6),
}

GEOMETRIC = {
    "line": line,
    "coords": coordinate_arrangement,
    "braid2": lambda: braid_arrangement(2),
    "braid3": lambda: braid_arrangement(3),
    "braid4": lambda: braid_arrangement(4),
    "braid3e": lambda: braid_arrangement(3, essentialize=True),
    "braid4e": lambda: braid_arrangement(4, essentialize=True),
    "dihedral4": lambda: dihedral_arrangement(4),
    "dihedral6": lambda: dihedral_arrangement(6),
}
