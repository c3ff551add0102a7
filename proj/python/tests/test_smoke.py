import pytest

import hopfsuper as hs


def test_scalars():
    z8 = hs.CycloScalar.zeta(8)
    assert z8 ** 8 == 1
    assert z8 ** 2 == hs.CycloScalar.zeta(4)
    assert hs.CycloScalar("1/2") + hs.CycloScalar("1/2") == 1
    assert abs(complex(hs.CycloScalar.sqrt2()) - 2 ** 0.5) < 1e-12
    with pytest.raises(hs.Error, match="DivisionByZero"):
        hs.CycloScalar(1) / hs.CycloScalar(0)


def test_builtins_certify():
    names = hs.builtin_names()
    assert len(names) >= 20
    for name in ("H4", "H8", "A4(-zeta4)", "K8(zeta4,0,1)"):
        assert hs.verify_axioms(hs.builtin(name))["ok"]


def test_sweedler_super_form():
    h4 = hs.builtin("H4")
    data = hs.super_data(h4)
    assert len(data) == 1
    c = hs.coinvariant_superalgebra(h4, data[0])
    assert (c.dim, c.dim_odd) == (2, 1)
    assert hs.identify_builtin(c) == "Lambda(1)"
    assert hs.verify_bosonization_roundtrip(h4, data[0])["ok"]


def test_multiply_and_comultiply():
    h = hs.builtin("A4(-zeta4)")
    z = h.element("z")
    assert h.multiply(z, z) == [1, 0, -1, 0]
    d = h.comultiply(h.element("x"))
    assert d[h.labels.index("z")][h.labels.index("z")] == -hs.CycloScalar.zeta(4)


def test_json_round_trip():
    h = hs.builtin("H8")
    assert hs.HopfSuperData.from_json(h.to_json()) == h


def test_compile_and_diagnostics():
    lam = hs.compile("hopf L over Q(zeta1)\ngen z odd\nrel z*z = 0\nbasis 1, z\ndelta z = z (x) 1 + 1 (x) z\n"
                     "counit z = 0\nantipode z = -z\n")
    assert (lam.dim, lam.dim_odd) == (2, 1)
    with pytest.raises(hs.Error, match="BasisNotClosed"):
        hs.compile("hopf L over Q(zeta1)\ngen x even\nbasis 1, x\ndelta x = x (x) 1 + 1 (x) x\n"
                   "counit x = 0\nantipode x = -x\n")


def test_superforms_report():
    r = hs.superforms(hs.builtin("A_C2xC2"))
    assert len(r["admissible"]) == 6
    assert sorted(f["identified"] for f in r["super_forms"]) == ["H4_2", "H4_3", "H4_4"]


def test_find_isomorphism():
    t = hs.tensor_product(hs.builtin("kZ2"), hs.builtin("Lambda(1)"))
    r = hs.find_isomorphism(hs.builtin_presentation("H4_2"), t)
    assert r["outcome"] == "isomorphic"
    assert hs.verify_isomorphism(hs.builtin("H4_2"), t, r["witness"])["ok"]


def test_suite():
    assert "dim2" in hs.suite_names()
    r = hs.run_suite("dim2")
    assert r["passed"]
    assert r["table"][0]["class"] == "Lambda(z)"
