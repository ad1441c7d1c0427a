import pytest

import tensorann as ta


def test_order():
    assert ta.leq("1|", "2|")
    assert not ta.leq("2,2|", "3,1|")
    assert ta.ann_contained("2|", "3|")
    assert sorted(ta.gt_pair("1|1")) == sorted(["1|1", "1|", "|1", "|"])
    assert len(ta.downset("2|")) == 3
    assert ta.dual([3, 1]) == [2, 1, 1]
    assert ta.std_tableaux_count([2, 2]) == 2


def test_branching():
    assert ta.branch([2, 1, 0]) == [[1, 0], [1, 1], [2, 0], [2, 1]]
    assert ta.weyl_dim([2, 1, 0]) == "8"
    assert ta.kostant_partition("1,0,-1") == "2"
    weights, depth, stabilized = ta.sc_set("2|", 2)
    assert stabilized and weights == [[0, 0], [1, 0], [2, 0]]
    assert ta.sc_contained("1|", "2|", 4)


def test_enveloping_algebra():
    assert ta.normal_form("sl2", "f*e") == ta.normal_form("sl2", "e*f - h")
    assert ta.is_central("sl3", ta.casimir("sl3"))
    assert not ta.is_central("sl2", "h")
    with pytest.raises(ValueError):
        ta.normal_form("sl2", "x")


def test_sl2():
    assert ta.sl2_classify("1") == "I_1"
    assert ta.sl2_classify("-3/2") == "J_[1/2]"
    assert ta.sl2_member("I:2", "e^3")
    assert not ta.sl2_member("J:3", "f")
    assert len(ta.sl2_witnesses("I:0")) == 3


def test_tensors():
    assert ta.tensor_decomposition(3, 1, 1) == [([1, 0, -1], 1)]
    assert ta.module_dim(3, "2|") == 6
    with pytest.raises(ValueError):
        ta.tensor_decomposition(4, 3, 3, cap=100)


def test_verify_group():
    results = ta.verify("sl2")
    assert [r["id"] for r in results] == [11, 12]
    assert all(r["passed"] for r in results)
