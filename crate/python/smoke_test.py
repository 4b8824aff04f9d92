"""Smoke test for the k3inv extension module.

Build and stage the module first (see README):

    cargo build -p k3inv-py --features extension-module --release
    cp target/release/libk3inv_py.so python/k3inv.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from fractions import Fraction

import k3inv


def re_part(wire):
    return float(wire.split(",")[0])


def main():
    inv = k3inv.InoseSurface(1, 0).invariants()
    assert inv == {"pi": "1", "sigma": "2", "j1": "1", "j2": "1"}, inv

    s = k3inv.InoseSurface(Fraction(4), "7")
    assert s.invariants()["sigma"] == "16"
    t = s.fibers("theta2")
    assert t["case"] == "tangent_plus" and t["euler_sum"] == 24, t["case"]
    assert k3inv.InoseSurface(0, 0).fibers("theta2")["counts"] == {"I*12": 1, "I1": 6}
    assert k3inv.InoseSurface(1, 0).fibers("psi2")["counts"] == {"I*6": 1, "I2": 2, "I4": 2}

    pair = k3inv.LegendrePair(2, 3)
    assert pair.upsilon_fibers()["case"] == "(a)"
    report, ok = pair.match_inose()
    assert ok and report["p"] == "2/3" and report["q_cubed"] == "-1/9", report
    _, ok = k3inv.LegendrePair(Fraction(5, 3), -2).match_inose(verify_all=True)
    assert ok

    e8 = k3inv.Lattice("E8")
    assert e8.rank == 8 and e8.det() == "1" and len(e8.roots()) == 240
    assert k3inv.Lattice("kummer").discriminant_form()["invariant_factors"] == [2] * 6
    h = k3inv.Lattice.from_gram("h", [[0, 1], [1, 0]])
    assert h.signature() == (1, 1, 0)
    assert "DK" in k3inv.Lattice.names()

    assert abs(re_part(k3inv.modular_j(0, 1)["j"]) - 1) < 1e-30
    p = k3inv.periods((0, 1), (0, 1))
    assert abs(re_part(p["sigma"]) - 2) < 1e-30 and abs(re_part(p["pi"]) - 1) < 1e-30

    assert k3inv.reconcile()["passed"]
    assert k3inv.verify_suite(quick=True)["passed"]

    for bad in (lambda: k3inv.InoseSurface("x", 1), lambda: k3inv.LegendrePair(1, 2), lambda: k3inv.Lattice("nope")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")
    try:
        k3inv.modular_j(0, 1, prec=100000)
    except ArithmeticError:
        pass
    else:
        raise AssertionError("expected ArithmeticError")

    print("k3inv smoke test passed")


if __name__ == "__main__":
    main()
