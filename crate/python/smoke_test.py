"""Smoke test for the pydesargues extension.

Build and install first:  maturin develop -m crates/py/Cargo.toml
(or `maturin build` and pip install the wheel), then run this file.
"""

import json

import pydesargues as pd


def main():
    f = pd.Field(2, 2)
    assert f.q == 4
    assert all(f.mul(a, f.inv(a)) == 1 for a in range(1, 4))

    c = pd.Configuration.frame(3, 5)
    assert len(c) == 15
    assert list(c.substructure_counts().values()) == [15, 20, 15]
    sweep = c.sweep()
    assert sweep["passed"] == 15
    ident = sweep["identity"]
    assert (ident["total"], ident["simplex_points"], ident["vertex"], ident["edge_points"]) == (15, 8, 1, 6)
    assert c.verify()["passed"]

    pair = c.pair(1, 2)
    assert pair.verify()["passed"]
    arc = json.loads(pair.lift(seed=5))
    assert len(arc["points"]) == 6
    back = pd.Configuration.section(json.dumps(arc)).pair(1, 2)
    assert back.a() == pair.a() and back.b() == pair.b()

    same = pd.Configuration.seeded(3, 7, seed=42).to_json()
    assert same == pd.Configuration.seeded(3, 7, seed=42).to_json()

    assert pd.count_frames(2, 3) == 5616 == pd.projectivity_group_order(2, 3)

    try:
        pd.Configuration.frame(2, 2)
    except pd.GeometryError as e:
        assert "FieldTooSmall" in str(e)
    else:
        raise AssertionError("GF(2) frame should be refused")

    print("smoke test ok")


if __name__ == "__main__":
    main()
