import random

import pytest

from cssbalance import (
    BitMatrix,
    ChainComplex,
    ClassicalCode,
    as_classical,
    as_css,
    cocomplex,
    complex_from_json,
    complex_to_json,
    homological_product,
    rep_standard,
    window,
)
from conftest import rand_valid_complex

H3 = BitMatrix.from_strings(["110", "011"])


def toy_css(h_z_row: str, h_x_row: str) -> ChainComplex:
    h_z = BitMatrix.from_strings([h_z_row])
    h_x = BitMatrix.from_strings([h_x_row])
    return ChainComplex((1, len(h_z_row), 1), (h_z.transpose(), h_x))


def test_validate_single_differential_ok():
    c = ChainComplex((3, 2), (H3,))
    assert c.validate() is None


def test_validate_toy_css_ok():
    assert toy_css("11", "11").validate() is None


def test_validate_names_failing_pair():
    report = toy_css("10", "10").validate()
    assert report is not None and "(d2, d1)" in report


def test_validate_reports_bad_shape():
    c = ChainComplex((3, 3), (H3,))
    assert "shape" in c.validate()


def test_cocomplex_involution(rng):
    for _ in range(30):
        c = rand_valid_complex(rng)
        assert cocomplex(cocomplex(c)) == c


def test_cocomplex_swaps_roles():
    q = ChainComplex((3, 6, 2), (BitMatrix.zeros(6, 3), BitMatrix.zeros(2, 6)))
    cc = cocomplex(q)
    assert cc.spaces == (2, 6, 3)
    css = as_css(q)
    flipped = as_css(cc)
    assert flipped.h_x == css.h_z and flipped.h_z == css.h_x


def test_cocomplex_of_classical_complex():
    r = rep_standard(3).complex
    rstar = cocomplex(r)
    assert rstar.spaces == (2, 3)
    assert rstar.diffs[0] == r.diffs[0].transpose()


def test_product_of_two_classical_complexes_dimensions():
    r1 = rep_standard(3).complex  # t=3, s=2
    r2 = rep_standard(2).complex  # t=2, s=1
    p = homological_product(r1, r2)
    assert p.spaces == (3 * 2, 3 * 1 + 2 * 2, 2 * 1)
    assert p.validate() is None


def test_product_dimension_identity(rng):
    for _ in range(40):
        x = rand_valid_complex(rng)
        y = rand_valid_complex(rng)
        p = homological_product(x, y)
        for grade in range(p.top_grade + 1):
            expect = sum(
                x.dim(i) * y.dim(grade - i)
                for i in range(x.top_grade + 1)
                if 0 <= grade - i <= y.top_grade
            )
            assert p.dim(grade) == expect


def test_product_passes_validate(rng):
    for _ in range(60):
        p = homological_product(rand_valid_complex(rng), rand_valid_complex(rng))
        assert p.validate() is None


def test_product_with_one_term_complex_scales(rng):
    x = rand_valid_complex(rng, max_terms=3)
    y = ChainComplex((3,))
    p = homological_product(x, y)
    assert p.spaces == tuple(3 * d for d in x.spaces)


def test_product_rejects_invalid_input():
    bad = toy_css("10", "10")
    with pytest.raises(ValueError):
        homological_product(bad, rep_standard(2).complex)


def test_product_blocks_match_explicit_layout():
    """The two differentials of (3-term) x (reversed 2-term) are exactly the
    advertised block matrices."""
    from cssbalance import block, q_complex

    q = q_complex(H3)
    r = rep_standard(2)
    p = homological_product(q.complex, cocomplex(r.complex))
    h_z_t, h_x, h, t, s = q.h_z.transpose(), q.h_x, r.h, r.t, r.s
    eye = BitMatrix.identity
    d2 = block([
        [h_z_t.kron(eye(t)), eye(q.n).kron(h.transpose())],
        [None, h_x.kron(eye(s))],
    ])
    d1 = block([[h_x.kron(eye(t)), eye(q.n_x).kron(h.transpose())]])
    d3 = block([[eye(q.n_z).kron(h.transpose())], [h_z_t.kron(eye(s))]])
    assert p.diffs == (d3, d2, d1)


def test_window_full_and_bottom():
    c = rand_valid_complex(random.Random(7), max_terms=3)
    assert window(c, c.top_grade, 0) == ChainComplex(c.spaces, c.diffs, c.labels)
    if c.top_grade >= 1:
        w = window(c, 1, 0)
        assert w.spaces == c.spaces[-2:]
        assert w.diffs == (c.diffs[-1],)
    with pytest.raises(IndexError):
        window(c, c.top_grade + 1, 0)


def test_window_of_product_keeps_last_three_terms():
    q = toy_css("11", "11")
    p = homological_product(q, cocomplex(rep_standard(2).complex))
    w = window(p, 2, 0)
    assert w.spaces == p.spaces[1:]
    assert w.diffs == p.diffs[1:]


def test_as_css_reads_off_checks():
    css = as_css(toy_css("11", "11"))
    assert (css.n, css.n_x, css.n_z) == (2, 1, 1)
    assert css.h_z == BitMatrix.from_strings(["11"])
    assert css.h_x == BitMatrix.from_strings(["11"])


def test_as_css_rejects_wrong_arity_and_invalid():
    with pytest.raises(ValueError):
        as_css(ChainComplex((1, 2, 2, 1), (BitMatrix.zeros(2, 1), BitMatrix.zeros(2, 2), BitMatrix.zeros(1, 2))))
    with pytest.raises(ValueError):
        as_css(toy_css("10", "10"))


def test_as_classical():
    code = as_classical(ChainComplex((3, 2), (H3,)))
    assert (code.t, code.s) == (3, 2)
    assert code.independent_checks
    with pytest.raises(ValueError):
        as_classical(toy_css("11", "11"))


def test_dependent_checks_flag():
    dup = BitMatrix.from_strings(["110", "110"])
    assert not ClassicalCode(dup).independent_checks


def test_json_round_trip(rng):
    for _ in range(20):
        c = rand_valid_complex(rng)
        again = complex_from_json(complex_to_json(c))
        assert again == c


def test_json_field_order():
    c = ChainComplex((3, 2), (H3,))
    text = complex_to_json(c)
    assert text.index('"spaces"') < text.index('"diffs"') < text.index('"labels"')


def test_json_rejects_garbage():
    with pytest.raises(ValueError):
        complex_from_json("not json")
    with pytest.raises(ValueError):
        complex_from_json('{"spaces": [2]}')
