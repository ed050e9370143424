import qkgr


def test_pairing_units():
    assert qkgr.pairing(1, 2, "1") == "1"
    assert qkgr.pairing(1, 2, "P1^-1") == "2"
    assert qkgr.pairing(2, 4, "P1*P2") == qkgr.pairing(2, 4, "P2*P1")


def test_series_counts_and_roundtrip():
    s = qkgr.series("JT", 1, 2, 2)
    assert s["schema"] == "qkgr/1"
    assert len(s["coeffs"]) == 3
    s2 = qkgr.series("IT_level", 2, 4, 2, level=1)
    assert len(s2["coeffs"]) == 6
    c = qkgr.series_coeff("J_pt", 2, 2, [1, 1])
    assert c["factors"] == [
        {"inv": True, "m": 1, "mono": {}},
        {"inv": True, "m": 1, "mono": {}},
    ]


def test_degree_gap():
    assert qkgr.q_degree_gap("JT", 0, 1, 3, [1]) == 3


def test_small_suite_passes():
    report = qkgr.verify("gamma")
    assert report["all_pass"] is True
    assert report["schema"] == "qkgr/1"


def test_jackson_translation():
    v = float(qkgr.qint_plus(0, "3", "2"))
    w = float(qkgr.qint_plus(0, "6", "2"))
    # replacing Lambda by q*Lambda multiplies the value by (1 - 1/Lambda)
    assert abs(w - (1 - 1 / 3) * v) < 1e-12
    assert abs(float(qkgr.qint_plus(0, "12", "2")) - (1 - 1 / 6) * w) < 1e-12


def test_critical_points():
    assert qkgr.critical_orbit_count(2, 4) == 6
    assert float(qkgr.critical_gradient_norm(1, 3)) < 1e-10
