import blockcheck


def test_version():
    assert blockcheck.__version__ == "0.1.0"


def test_classify_central():
    assert blockcheck.classify_central("D", 4) == [[1, 3], [1, 4], [3, 4]]
    assert blockcheck.classify_central("A", 4) == []
    assert blockcheck.classify_central("E", 7) == [[1, 2, 4]]
    assert blockcheck.classify_central("C", 6) == [[1, 3, 5]]


def test_lattice_quotient():
    q = blockcheck.lattice_quotient("B", 5, [5])
    assert q["torsion_free"] is True
    assert q["free_rank"] == 4

    full = blockcheck.lattice_quotient("A", 7)
    assert full["factors"] == [8]
    assert full["free_rank"] == 0

    e7 = blockcheck.lattice_quotient("E", 7, [1, 2, 4])
    assert e7["factors"] == [2]
    assert e7["free_rank"] == 4


def test_weyl_orbits():
    assert blockcheck.weyl_orbit_size("A", 3, 1) == 12
    assert blockcheck.weyl_orbit_size("B", 4, 4) == 8
    assert blockcheck.same_orbit("C", 5, 1, 2)
    assert not blockcheck.same_orbit("C", 5, 1, 5)


def test_sl2_shapes():
    s = blockcheck.sl2_shapes(5)
    assert s["order"] == 120
    assert s["sylow"]["label"] == "quaternion"
    assert s["sylow"]["order"] == 8
    assert s["central_quotient"]["label"] == "klein_four"

    s9 = blockcheck.sl2_shapes(9)
    assert s9["sylow"]["order"] == 16
    assert s9["central_quotient"]["label"] == "dihedral"


def test_gl42_certificate():
    c = blockcheck.gl42_certificate()
    assert c["group_order"] == 20160
    assert c["certified"] is True
    assert 15 in c["spectrum"]


def test_aut_orders():
    assert blockcheck.aut_order([1, 1, 1, 1]) == 20160
    assert blockcheck.aut_order([3, 3, 1]) == 24576
    assert blockcheck.aut_is_two_group([3, 1])
    assert not blockcheck.aut_is_two_group([2, 2])


def test_rank2_invariants():
    c = blockcheck.rank2_invariants([2, 2], 3)
    assert c["k"] == 8
    assert c["l"] == 3


def test_torus_fixed_order():
    assert blockcheck.torus_fixed_order(3, 3) == 13
    assert blockcheck.torus_fixed_order(3, 3, twisted=True) == 7


def test_classify_case():
    r = blockcheck.classify_case("A", 5, 3, centralizer="quasi_isolated_nontoral")
    assert r["label"] == "case_iii"
    assert r["defect"]["label"] == "quaternion"
    assert r["defect"]["order"] == 8

    r = blockcheck.classify_case("E", 7, 3)
    assert r["label"] == "case_ii"


def test_run_checks_and_summary():
    records = blockcheck.run_checks("weylorb")
    assert records and all(r["pass"] for r in records)
    assert set(blockcheck.module_names()) >= {"rootsys", "blockinv"}

    summary = blockcheck.verify_all("rootsys")
    assert summary["failed"] == 0
    assert summary["total"] == summary["passed"] > 0
