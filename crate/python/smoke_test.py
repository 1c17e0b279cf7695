#!/usr/bin/env python3
"""Smoke test for the minorspex_py extension module.

Build the cdylib first:

    cargo build -p minorspex-py --release

then run:

    python3 python/smoke_test.py
"""

import json
import math
import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libminorspex_py.so",
        root / "target" / "debug" / "libminorspex_py.so",
        root / "target" / "release" / "libminorspex_py.dylib",
        root / "target" / "debug" / "libminorspex_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p minorspex-py --release")
    tmp = Path(tempfile.mkdtemp(prefix="minorspex_py_"))
    suffix = ".so" if built.suffix == ".so" else ".so"
    shutil.copy2(built, tmp / f"minorspex_py{suffix}")
    sys.path.insert(0, str(tmp))
    import minorspex_py

    return minorspex_py


def main():
    mx = load_module()

    # graph6 round trip
    g = mx.Graph.from_graph6("D?{")
    assert g.n == 5 and g.to_graph6() == "D?{"

    # Petersen basics
    pet = mx.petersen()
    assert pet.n == 10 and pet.edge_count == 15
    assert all(pet.degree(v) == 3 for v in range(10))
    assert mx.independence_number(pet) == 4
    assert mx.has_minor(pet, mx.complete(5))

    # elementary operations
    c5 = mx.cycle(5)
    assert c5.is_isomorphic(c5.complement())
    w5 = mx.complete(1).join(mx.cycle(4))
    assert w5.n == 5 and w5.edge_count == 8
    assert c5.delete_vertex(0).is_isomorphic(mx.path(4))

    # witness model checks out
    model = mx.find_model(pet, mx.complete(5))
    assert model is not None and mx.verify_model(pet, mx.complete(5), model)

    # spectral radius of the book matches the closed form
    b28 = mx.book(2, 8)
    cert = mx.spectral_radius(b28)
    assert abs(cert["rho"] - mx.book_rho(2, 10)) < 1e-9
    assert cert["residual"] <= 1e-12

    # complement identities around the star forest
    h41c = mx.star_forest(4, 1).complement()
    assert h41c.is_isomorphic(mx.subdivided_clique(4, 1))
    s = mx.subdivided_complement_star_forest(4, 1)
    assert s.is_isomorphic(mx.subdivided_clique(4, 2))

    # family invariants for {K_{2,3}, K_4}
    fam = [mx.complete_multipartite([3, 2]), mx.complete(4)]
    inv = mx.family_invariants(fam)
    assert inv["gamma_family"] == 1 and inv["alpha_family"] == 3
    gamma_union = mx.gamma_union_family(fam)
    assert len(gamma_union) == 3
    assert mx.is_connected_family(gamma_union)

    # small spex: triangle-free (forests), n = 6 -> the star K_{1,5}
    report = mx.spex(6, [mx.complete(3)])
    assert abs(report["value"] - math.sqrt(5)) < 1e-9
    assert report["extremal"] == [mx.book(1, 5).canonical_form()]
    assert report["total_minor_free"] == 20

    # theorem harness: the subdivided-clique extremum at n = 7
    verdict = mx.verify_theorem("lemma3.2", 7)
    assert verdict["assertions_passed"]

    print(json.dumps({"smoke_test": "ok"}))


if __name__ == "__main__":
    main()
