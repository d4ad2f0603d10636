import pytest

import bshm


def test_bent_instance_and_graphs():
    h, rows, cert = bshm.pds_to_bshm(4, bshm.bent_difference_set(2))
    assert (cert["n"], cert["ell"], cert["a"], cert["b"]) == (16, 6, 2, -2)
    assert cert["kind"] == "equiangular"
    assert h.is_hadamard()
    inside = bshm.to_regular_form(h, rows, rows[0])
    assert bshm.verify_bshm(inside, rows)["graph"] == {"v": 16, "k": 10, "lambda": 6, "mu": 6}
    mate = bshm.extract_unbiased_mate(h, rows)
    assert mate.is_hadamard()


def test_spread_union_and_row_shift():
    elems = bshm.spread_union_pds(3, 2)
    assert bshm.verify_pds(6, elems)["alpha"] == 6
    h, rows, cert = bshm.pds_to_bshm(6, elems)
    assert cert["kind"] == "type1"
    up = bshm.add_allones_row(h, rows)
    assert (up["ell"], up["a"], up["b"], up["kind"]) == (15, 7, -1, "type2")


def test_twin_packing():
    _, blocks, certs = bshm.packing_to_multibshm(2, [[0], [1, 2], [3, 4]], 0)
    assert [(c["ell"], c["a"], c["b"]) for c in certs] == [(4, 4, 0), (6, 2, -2), (6, 2, -2)]
    assert sum(len(b) for b in blocks) == 15


def test_imprimitive_pipeline():
    h, rows, cert = bshm.construct_ns_n_n_0(bshm.hadamard_matrix(12), bshm.hadamard_matrix(4))
    assert (cert["n"], cert["ell"]) == (48, 12)
    h2, rows2, cert2 = bshm.b0_to_bm1(h, rows)
    assert cert2["graph"] == {"v": 48, "k": 3, "lambda": 2, "mu": 0}
    assert bshm.add_allones_row(h2, rows2)["b"] == 0


def test_classification():
    eq = bshm.classify_params(16, 6, 2, -2)
    assert eq["class"] == "equiangular-primitive"
    assert len(eq["graphs"]) == 2
    bad = bshm.classify_params(36, 10, 4, -2)
    assert not bad["feasible"] and bad["rule"] == "mod4"


def test_tables_and_matrix_round_trip():
    assert bshm.table_tsv(2).count("\n") == 17
    m = bshm.PmMatrix([[1, 1], [1, -1]])
    assert m == bshm.sylvester(1)
    assert bshm.PmMatrix.parse(m.format()).tolist() == [[1, 1], [1, -1]]


def test_errors_are_raised():
    with pytest.raises(bshm.BshmError):
        bshm.hadamard_matrix(92)
    with pytest.raises(ValueError):
        bshm.verify_pds(4, [1, 2, 3, 4, 5, 6, 9])
