"""Smoke tests for the python bindings: exact counts, bounds, constructions."""

import os
import sys
import tempfile

import _sscode as m


def check(cond, label):
    if not cond:
        raise AssertionError(label)


def main():
    check(m.gaussian_binomial(2, 4, 2) == 35, "gaussian binomial")
    check(m.projective_space_size(2, 6) == 2825, "space size")
    check(m.pair_count(2, 4, 2, 2, 2, "subspace") == 18, "pair count")
    check(m.ball_volume(2, 4, 2, 1, "subspace") == 7, "ball volume")

    b = m.packing_bounds(2, 10, 5, "subspace")
    check(b["lower"] == 32771 and b["upper"] == 51203, "packing bounds")
    check(isinstance(b["lower"], int), "big integers cross as python ints")

    c = m.cdc_bounds(2, 10, 5, 5)
    check(c["lower"] == 33 and c["upper"] == 33, "cdc bounds")

    k = m.covering_bounds(2, 6, 2, "subspace", True)
    check(k["lower"] == 11 and k["lp_value"] == "74/7", "covering bounds")
    check(k["ilp_value"] == 11, "ilp value")

    check(m.asymptotic_rate("k_I", "1/4") == "1/4", "asymptotic rate")
    check(m.asymptotic_rate("a_S_cdc", "1/4", "1/2") == "3/4", "cdc rate")

    for which in (1, 2):
        rep = m.reproduce_table(which)
        check(rep["ok"], f"table {which} relations")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "code.txt")
        info = m.construct("kk", 2, 6, r=3, d=2, output=path)
        check(info["size"] == 64, "construction size")
        check(m.code_min_distance(path, "injection") == 2, "oracle min distance")

        cover = os.path.join(tmp, "cover.txt")
        m.construct("union", 2, 6, rho=1, output=cover)
        check(m.code_covering_radius(cover, "subspace") <= 1, "oracle radius")

    check(m.max_packing(2, 4, 3, "injection") == 2, "max packing")
    try:
        m.max_packing(2, 12, 2)
        raise AssertionError("resource limit not raised")
    except m.EnumerationTooLarge:
        pass

    print("python smoke: all checks passed")


if __name__ == "__main__":
    sys.exit(main())
