#!/usr/bin/env python3
"""Writes the golden-table fixtures in data/ from tools/orbit_tables.py."""
import json
import math
import os
import sys
from fractions import Fraction as F

sys.path.insert(0, os.path.dirname(__file__))
import orbit_tables as T  # noqa: E402

GAMMA0 = math.atan(math.sqrt(3) * (1 + math.cos(4 * math.pi / 7)) * math.tan(math.pi / 7) / math.sin(4 * math.pi / 7))


def angle_str(c):
    c = F(c)
    if c == 0:
        return "0"
    num = {1: "pi", -1: "-pi"}.get(c.numerator, f"{c.numerator}pi")
    return num if c.denominator == 1 else f"{num}/{c.denominator}"


def ev(e, theta):
    if e[0] == "g0":
        return e[1] * math.pi + e[2] * GAMMA0
    return angle_str(e[0] + e[1] * theta)


def table(name, tab, theta, expected, fixes=None, beta_fixes=None):
    fixes = fixes or {}
    beta_fixes = beta_fixes or {}
    n = tab["n"]
    rows = []
    for bi, (beta, idx, cells) in enumerate(tab["blocks"]):
        printed_beta = None
        if bi in beta_fixes:
            printed_beta = [ev(b, theta) for b in beta]
            beta = beta_fixes[bi]
        for gs, w in cells:
            gamma = [None] * (n - 3)
            for k, g in zip(idx, gs):
                gamma[k - 1] = ev(g, theta)
            row = {"beta": [ev(b, theta) for b in beta], "gamma": gamma, "word": fixes.get(w, w)}
            if w in fixes:
                row["word_as_printed"] = w
            if printed_beta:
                row["beta_as_printed"] = printed_beta
            rows.append(row)
    base_gamma = [ev(g, theta) for g in tab["base"][1]]
    return {
        "name": name,
        "n": n,
        "alpha": [ev(a, theta) for a in tab["alpha"]],
        "tol": 1e-6,
        "gamma_sign": -1,
        "basepoint": {"beta": [ev(b, theta) for b in tab["base"][0]], "gamma": base_gamma},
        "expected_length": expected,
        "rows": rows,
    }


# Exceptional finite orbits for n = 4: (solution, orbit length, alpha / pi, field).
_N4 = [
    (1, 5, "22/15 8/5 8/5 28/15", "Q"),
    (4, 6, "19/12 19/12 23/12 23/12", "Q(sqrt2)"),
    (6, 6, "23/15 23/15 5/3 29/15", "Q(sqrt5)"),
    (7, 6, "17/15 5/3 29/15 29/15", "Q(sqrt5)"),
    (8, 7, "10/7 12/7 12/7 12/7", "Q"),
    (10, 8, "17/12 7/4 7/4 23/12", "Q(sqrt2)"),
    (11, 8, "13/10 3/2 19/10 19/10", "Q(sqrt5)"),
    (12, 8, "3/2 17/10 17/10 19/10", "Q(sqrt5)"),
    (13, 9, "26/15 26/15 26/15 28/15", "Q(sqrt5)"),
    (14, 9, "14/15 28/15 28/15 28/15", "Q(sqrt5)"),
    (15, 10, "8/5 8/5 9/5 9/5", "Q"),
    (18, 10, "23/15 23/15 23/15 9/5", "Q(sqrt5)"),
    (19, 10, "7/5 29/15 29/15 29/15", "Q(sqrt5)"),
    (20, 12, "11/6 11/6 11/6 11/6", "Q(sqrt2)"),
    (22, 12, "19/15 9/5 9/5 29/15", "Q(sqrt5)"),
    (23, 12, "37/30 47/30 11/6 11/6", "Q(sqrt5)"),
    (24, 12, "49/30 11/6 11/6 59/30", "Q(sqrt5)"),
    (25, 12, "43/30 49/30 53/30 59/30", "Q(sqrt5)"),
    (26, 15, "8/5 26/15 26/15 26/15", "Q(sqrt5)"),
    (27, 15, "6/5 28/15 28/15 28/15", "Q(sqrt5)"),
    (30, 16, "7/4 7/4 7/4 7/4", "Q"),
    (32, 18, "37/21 37/21 37/21 41/21", "Q(cos(pi/7))"),
    (33, 18, "4/3 12/7 12/7 12/7", "Q(cos(pi/7))"),
    (34, 18, "25/21 41/21 41/21 41/21", "Q(cos(pi/7))"),
    (37, 20, "47/30 53/30 19/10 19/10", "Q(sqrt5)"),
    (38, 20, "41/30 17/10 17/10 59/30", "Q(sqrt5)"),
    (39, 24, "3/2 11/6 11/6 11/6", "Q(sqrt5)"),
    (40, 30, "23/15 23/15 28/15 28/15", "Q(sqrt5)"),
    (41, 30, "26/15 26/15 29/15 29/15", "Q(sqrt5)"),
    (43, 40, "17/10 17/10 17/10 17/10", "Q(sqrt5)"),
    (44, 40, "19/10 19/10 19/10 19/10", "Q(sqrt5)"),
    (45, 72, "11/6 11/6 11/6 11/6", "Q(sqrt5)"),
]
# A seed on each orbit: alpha in chain order, beta, gamma (found by a grid search in pi/60 steps).
_N4_SEEDS = {
    1: ("22pi/15,8pi/5,8pi/5,28pi/15", "pi", "pi/2"),
    4: ("19pi/12,19pi/12,23pi/12,23pi/12", "pi", "0"),
    6: ("23pi/15,23pi/15,5pi/3,29pi/15", "6pi/5", "0"),
    7: ("17pi/15,5pi/3,29pi/15,29pi/15", "6pi/5", "0"),
    8: ("10pi/7,12pi/7,12pi/7,12pi/7", "pi", "pi/4"),
    10: ("17pi/12,7pi/4,7pi/4,23pi/12", "3pi/2", "0"),
    11: ("13pi/10,3pi/2,19pi/10,19pi/10", "4pi/3", "0"),
    12: ("3pi/2,17pi/10,17pi/10,19pi/10", "4pi/3", "0"),
    13: ("26pi/15,26pi/15,26pi/15,28pi/15", "2pi/3", "0"),
    14: ("14pi/15,28pi/15,28pi/15,28pi/15", "6pi/5", "0"),
    15: ("8pi/5,8pi/5,9pi/5,9pi/5", "pi", "0"),
    18: ("23pi/15,23pi/15,23pi/15,9pi/5", "pi", "pi/4"),
    19: ("7pi/5,29pi/15,29pi/15,29pi/15", "2pi/3", "0"),
    20: ("11pi/6,11pi/6,11pi/6,11pi/6", "pi/2", "0"),
    22: ("19pi/15,9pi/5,9pi/5,29pi/15", "pi", "pi/2"),
    23: ("37pi/30,47pi/30,11pi/6,11pi/6", "6pi/5", "0"),
    24: ("49pi/30,11pi/6,11pi/6,59pi/30", "2pi/3", "pi/3"),
    25: ("43pi/30,49pi/30,53pi/30,59pi/30", "4pi/3", "pi/3"),
    26: ("8pi/5,26pi/15,26pi/15,26pi/15", "4pi/5", "pi/5"),
    27: ("6pi/5,28pi/15,28pi/15,28pi/15", "pi", "pi/4"),
    30: ("7pi/4,7pi/4,7pi/4,7pi/4", "2pi/3", "pi/6"),
    32: ("37pi/21,37pi/21,37pi/21,41pi/21", "pi", "pi/4"),
    33: ("4pi/3,12pi/7,12pi/7,12pi/7", "pi", "pi/4"),
    34: ("25pi/21,41pi/21,41pi/21,41pi/21", "pi", "pi/4"),
    37: ("47pi/30,53pi/30,19pi/10,19pi/10", "2pi/3", "0"),
    38: ("41pi/30,17pi/10,17pi/10,59pi/30", "6pi/5", "pi/5"),
    39: ("3pi/2,11pi/6,11pi/6,11pi/6", "4pi/5", "0"),
    40: ("23pi/15,23pi/15,28pi/15,28pi/15", "pi", "0"),
    41: ("26pi/15,26pi/15,29pi/15,29pi/15", "2pi/3", "pi/6"),
    43: ("17pi/10,17pi/10,17pi/10,17pi/10", "2pi/3", "pi/6"),
    44: ("19pi/10,19pi/10,19pi/10,19pi/10", "2pi/5", "pi/10"),
    45: ("11pi/6,11pi/6,11pi/6,11pi/6", "2pi/5", "pi/10"),
}
N4_ROWS = [
    {
        "sol": s,
        "length": l,
        "alpha": [angle_str(F(x)) for x in a.split()],
        "field": k,
        "seed": {"alpha": _N4_SEEDS[s][0].split(","), "beta": [_N4_SEEDS[s][1]], "gamma": [_N4_SEEDS[s][2]]},
    }
    for s, l, a, k in _N4
]

# n = 4 lemma orbits: alpha, seed (beta, gamma or None), orbit length. Gamma in the library convention.
N4_SEEDS = [
    ("Sol 8", ["12pi/7", "12pi/7", "10pi/7", "12pi/7"], "pi", "3pi/4", 7),
    ("Sol 33", ["4pi/3", "12pi/7", "12pi/7", "12pi/7"], "10pi/7", None, 18),
    ("Type II", ["7pi/4", "7pi/4", "5pi/3", "5pi/3"], "4pi/3", None, 2),
    ("Type II equal", ["7pi/4", "7pi/4", "7pi/4", "7pi/4"], "3pi/2", None, 2),
    ("Type III", ["4pi/3", "3pi/2", "7pi/4", "7pi/4"], "4pi/3", "0", 3),
    ("Type IV", ["7pi/4", "7pi/4", "7pi/4", "pi"], "2pi/3", "0", 4),
    ("Type IV*", ["7pi/4", "7pi/4", "7pi/4", "5pi/4"], "2pi/3", "pi", 4),
]


def n4_seeds():
    return {"orbits": [{"name": nm, "alpha": a, "beta": [b], "gamma": [g], "length": l} for nm, a, b, g, l in N4_SEEDS]}


def write(path, obj):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1)
        fh.write("\n")


def main():
    out = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "data")
    s74 = F(7, 4)
    write(os.path.join(out, "jester_12pi7.json"), table("jester's hat, theta = 12pi/7", T.JESTER, F(12, 7), 40))
    write(os.path.join(out, "jester_7pi4.json"), table("jester's hat, theta = 7pi/4", T.JESTER, s74, 40))
    write(os.path.join(out, "hang_glider.json"), table("hang-glider, theta = 7pi/4", T.HANG, s74, 9))
    # The last sand clock block prints beta_2 = 3theta - 4pi; the orbit point sits at 8pi - 4theta.
    write(os.path.join(out, "sand_clock.json"),
          table("sand clock, theta = 7pi/4", T.SAND, s74, 12, beta_fixes={3: [T.T(6, -3), T.T(8, -4)]}))
    write(os.path.join(out, "bat.json"), table_bat())
    write(os.path.join(out, "n4_exceptional.json"), {"rows": N4_ROWS})
    write(os.path.join(out, "n4_orbits.json"), n4_seeds())


# Two printed words in the gamma0 block land elsewhere; these replacements reach the
# listed cell. Keyed by (row, column) since the printed words repeat across cells.
BAT_CELL_FIXES = {(0, 4): "t(1,2)^2t(1,3)t(3,4)", (2, 4): "t(1,3)t(2,4)t(1,2)t(2,3)"}


def table_bat():
    tab = T.BAT
    tb = table("bat, theta = 12pi/7", tab, F(12, 7), 105)
    start = sum(len(b[2]) for b in tab["blocks"][:2])
    for k, cell in enumerate(T.BAT_C):
        if cell in BAT_CELL_FIXES:
            row = tb["rows"][start + k]
            row["word_as_printed"] = row["word"]
            row["word"] = BAT_CELL_FIXES[cell]
    return tb


if __name__ == "__main__":
    main()
