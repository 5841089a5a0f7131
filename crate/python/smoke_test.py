"""Smoke test for the compiled `pathlab` extension.

Build and run from the repository root:

    cargo build --release -p pathlab-python --features extension-module
    cp target/release/libpathlab.so python/pathlab.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pathlab  # noqa: E402


def poly(terms):
    return {tuple(e): c for e, c in terms}


def main():
    top, bottom = "NNENEE", "ENEENN"

    tb = poly(pathlab.distribution(top, bottom, "tb"))
    assert tb == {
        (3, 0): 1, (2, 1): 1, (1, 2): 1, (0, 3): 1, (2, 0): 2,
        (1, 1): 2, (0, 2): 2, (1, 0): 2, (0, 1): 2, (0, 0): 1,
    }, tb
    bl = poly(pathlab.distribution(top, bottom, "bl"))
    assert bl == {
        (3, 0): 1, (2, 1): 1, (0, 3): 1, (2, 0): 2, (1, 1): 3,
        (0, 2): 3, (1, 0): 2, (0, 1): 2,
    }, bl

    # the Tutte polynomial is sum x^l y^b in every order
    lb = poly(pathlab.distribution(top, bottom, "lb"))
    assert poly(pathlab.tutte(top, bottom)) == lb
    assert poly(pathlab.tutte(top, bottom, "reversed")) == lb

    p = "NENNEE"
    t, b, _, _ = pathlab.contact_stats(top, bottom, p)
    q = pathlab.swap_path(top, bottom, p)
    t2, b2, _, _ = pathlab.contact_stats(top, bottom, q)
    assert (t2, b2) == (b, t)
    assert pathlab.swap_path(top, bottom, q) == p
    assert pathlab.swap_path("NNEE", "ENEN", "NNEE") == "ENEN"

    w = pathlab.switch("ttbtb")
    assert pathlab.switch(w, inverse=True) == "ttbtb"

    paths = ["NNENENNEEEE", "ENNNENEENEE", "ENENENNEENE"]
    rows = pathlab.psi("NNNNNEEEEEE", "ENEENNENEEN", paths)
    assert rows == [[1, 1, 2, 2, 3, 4], [2, 3, 3, 4], [4, 5, 6], [5, 6, 7], [8]], rows
    assert pathlab.psi_inv("NNNNNEEEEEE", "ENEENNENEEN", rows, 3) == paths

    assert pathlab.count_tuples("NNEE", "ENEN", 2) == (14, 14)
    assert pathlab.catalan_det(6, 2) == 3 == pathlab.count_k_triangulations(6, 2)
    assert pathlab.run_suite("switch", 10)[1] == 0

    try:
        pathlab.contact_stats(top, bottom, "EEENNN")
    except ValueError:
        pass
    else:
        raise AssertionError("path outside the region accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
