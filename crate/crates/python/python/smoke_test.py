"""Smoke test for the pyadcurve extension module.

Build first, e.g. `maturin develop -m crates/python/Cargo.toml`, then run
`python crates/python/python/smoke_test.py`.
"""

import json

import pyadcurve as ad


def main():
    y = ad.YoungDiagram.parse("2,1^5")
    assert y.columns == [2, 1, 1, 1, 1, 1]
    assert y.rank() == 7
    assert y.truncate().columns == [1, 1, 1, 1, 1]
    assert y.complement(3).columns == [2, 2, 2, 2, 2, 1]

    pi = ad.Parameter.type_one(1, 5, 2, [2])
    assert pi.slope == (5, 2)
    assert pi.classify() == "standard-type-I"
    assert pi.dimension() == 2
    assert pi.apply("F+").slope == (5, 7)
    assert pi.apply("F,F") == pi

    d3_sl7 = ad.Parameter.type_one(1, 3, 7, [2, 1, 1, 1, 1, 1])
    assert d3_sl7.label() == "D_3^7(sl_7, [2,1^5])"
    assert d3_sl7.label(short=True) == "D_3(sl_7, [2,1^5])"
    plus = d3_sl7.gamma_plus()
    assert plus["parameter"]["slope"] == {"s": 3, "r": 1}
    assert plus["diagram"]["dims"] == [1, 3, 2, 1, 3, 1]

    five = ad.Parameter.type_one(1, 7, 13, [5, 3, 2, 2, 1])
    assert ad.duality_complement(five) == ad.Parameter.type_one(1, 7, 22, [6, 5, 5, 4, 2])
    assert ad.duality_add_columns(pi, 2) == pi.apply("F+,F+")

    orbit = pi.orbit(8)
    assert len(orbit["nodes"]) == 4
    assert ad.Parameter.from_json(pi.to_json()) == pi
    assert ad.Parameter.from_json(json.dumps(orbit["nodes"][1])).slope == (5, 3)

    try:
        pi.apply("F-")
    except ValueError as e:
        assert str(e).startswith("NotAllowed")
    else:
        raise AssertionError("F- at slope 5/2 should be refused")

    print("pyadcurve smoke test passed")


if __name__ == "__main__":
    main()
