from fractions import Fraction

import pytest

import rtm


def test_tree_counts():
    assert [len(rtm.enumerate_trees(n)) for n in range(1, 9)] == [1, 1, 2, 4, 9, 20, 48, 115]


def test_forest_round_trip_is_canonical():
    f = rtm.Forest("[[]] [[][[]]] []")
    assert str(f) == "[] [[]] [[][[]]]"
    assert f == rtm.Forest(str(f))
    assert f.degree == 7
    assert hash(f) == hash(rtm.Forest("[] [[][[]]] [[]]"))
    assert rtm.Forest("[] []").bplus() == rtm.Forest("[[][]]")


def test_coproduct_of_cherry():
    v, one = rtm.Forest("[]"), rtm.Forest()
    assert rtm.coproduct("[[][]]") == {
        (rtm.Forest("[[][]]"), one): 1,
        (rtm.Forest("[] []"), v): 1,
        (v, rtm.Forest("[[]]")): 2,
        (one, rtm.Forest("[[][]]")): 1,
    }


def test_rooted_tree_map_values():
    assert rtm.apply("[] []", "x") == rtm.Poly("xyy - xxy")
    assert rtm.apply("[[][]]", "x") == rtm.Poly("-xxxy - 2xxyy + xyxy + 2xyyy")
    assert rtm.apply(rtm.Forest(), "xy") == rtm.Poly("xy")
    assert rtm.apply(rtm.Element(), "xy").is_zero()


def test_diamond_and_sigma():
    assert rtm.diamond("x", "y") == rtm.Poly("xy + yx")
    assert rtm.diamond("y", "y") == rtm.Poly("yy - xy")
    assert rtm.sigma("[[][]]") == rtm.Poly("-xxy - 2xyy + yxy + 2yyy")


def test_element_arithmetic_is_exact():
    a = Fraction(1, 3) * rtm.Element("[]")
    b = a * rtm.Element("[[]]")
    assert b.coefficient("[] [[]]") == Fraction(1, 3)
    assert not (a - a)
    assert str(2 * rtm.Poly("xy")) == "2xy"


def test_relation_family():
    for m in range(1, 5):
        for n in range(1, 5):
            report = rtm.verify_fmn(m, n)
            assert report["all_hold"], (m, n)
    f22 = rtm.fmn(2, 2)
    assert rtm.sigma(f22).is_zero()
    assert rtm.apply(f22, "xyxy").is_zero()


def test_basis_and_kernel():
    assert rtm.basis_matrix(2) == [[1, 2], [-1, 1]]
    assert all(rtm.check_mod2_invertible(d) for d in range(1, 7))
    assert [len(rtm.sigma_kernel(d)) for d in range(1, 7)] == [0, 0, 0, 1, 4, 16]
    assert rtm.hy_words(2) == ["xy", "yy"]


def test_decompose_reconstructs_sigma():
    f = rtm.Element("[[[]]] [] - 3*[[][][]]")
    coeffs = rtm.decompose(f)
    total = rtm.Poly()
    for u, c in coeffs.items():
        total = total + c * rtm.sigma(u)
    assert total == rtm.sigma(f)


def test_errors():
    with pytest.raises(rtm.ParseError):
        rtm.Forest("[[]")
    with pytest.raises(rtm.ParseError):
        rtm.Poly("xz")
    with pytest.raises(rtm.DomainError):
        rtm.fmn(0, 3)
    with pytest.raises(ValueError):
        rtm.enumerate_trees(0)


def test_selfcheck():
    results = rtm.selfcheck(4)
    assert results and all(passed for _, passed, _ in results)
