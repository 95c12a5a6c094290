"""Regenerates golden_curves.csv with exact fractions, independently of the Rust code."""
from fractions import Fraction as F
import math

GRID = [F(1, 2), F(7, 10), F(71, 100), F(1)]


def dec(x):
    if x is None:
        return ""
    scaled = x * 10**6
    r = math.floor(scaled + F(1, 2))
    return f"{r // 10**6}.{r % 10**6:06d}"


def row(g):
    one, two, three = F(1), F(2), F(3)
    td = one + g
    if g < 1:
        td = min(td, 2 * g * g / (2 * g * g - 2 * g + 1))
    chris = (2 * g**3 + 2 * g**2) / (3 * g**2 - 2 * g + 1)
    stsp_trivial = 2 * g * g / (1 - g) if g < 1 else None
    generic = one + F(1, 3) * (stsp_trivial - 1) if stsp_trivial is not None else None
    refined = (1 + g) / (1 + 3 * g - 4 * g * g) if g < 1 else None
    best = min(x for x in (chris, refined, generic) if x is not None)
    ok3 = 3 * g * g < 1
    atsp_cc = F(1, 2) + g**3 / (1 - 3 * g * g) if ok3 else None
    atsp_trivial = 2 * g**3 / (1 - 3 * g * g) if ok3 else None
    single_stsp = 3 * g * g / (3 * g * g - 2 * g + 1)
    if g < 1:
        single_stsp = min(single_stsp, (two - g) / (three - 3 * g))
    single_atsp = min((1 + g) / (2 - g - g**3), g / (1 - g)) if g < 1 else None
    vals = [td, chris, generic, refined, best, stsp_trivial, atsp_cc, atsp_trivial, single_stsp, single_atsp]
    return ",".join([dec(g)] + [dec(v) for v in vals])


HEADER = "gamma,tree_doubling,christofides,cc_generic,cc_refined,randomized_best,stsp_trivial,atsp_cycle_cover,atsp_trivial,single_stsp,single_atsp"

if __name__ == "__main__":
    print(HEADER)
    for g in GRID:
        print(row(g))
