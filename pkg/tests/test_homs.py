import math

import pytest

from cuntzlim import (
    CodeReport,
    GenHom,
    HomError,
    O,
    O_INF,
    apply,
    compose,
    equals,
    f,
    f_inf,
    gen,
    hom_exists,
    identity,
    make_hom,
    mono,
    q,
    rn,
    unit,
    validate_prefix_code,
    zero,
)
from cuntzlim.parser import render


def words(h):
    return [next(iter(h.image(k).terms))[0] for k in h.gens()]


def test_f_1_2_generator_images():
    assert words(f(1, 2)) == [(1,), (2, 1), (2, 2)]


def test_f_2_4_generator_images():
    assert words(f(2, 4)) == [(1,), (2,), (3, 1), (3, 2), (3, 3)]


def test_f_1_4_generator_images():
    assert words(f(1, 4)) == [
        (1,),
        (2, 1),
        (2, 2, 1),
        (2, 2, 2, 1),
        (2, 2, 2, 2),
    ]


def test_f_general_formula():
    h = f(3, 6)
    # generator 3*l+i -> s4^l s_i, last generator -> s4^(6/3)
    assert words(h) == [
        (1,), (2,), (3,),
        (4, 1), (4, 2), (4, 3),
        (4, 4),
    ]


def test_f_requires_divisibility():
    with pytest.raises(HomError):
        f(2, 3)
    with pytest.raises(HomError):
        f(0, 4)


def test_f_validates_as_unital_star_hom():
    f(2, 6, validate=True)
    f(1, 5, validate=True)


def test_compose_matches_direct_connecting_map():
    c = compose(f(1, 2), f(2, 4), validate=False)
    d = f(1, 4)
    assert all(equals(c.image(k), d.image(k)) for k in d.gens())


def test_identity_and_apply():
    h = identity(O(3))
    e = mono(O(3), (1, 2), (3,))
    assert apply(h, e) == e


def test_apply_is_star_homomorphism():
    h = f(1, 2)
    a = mono(O(3), (1,), (2,)) + gen(O(3), 3)
    b = mono(O(3), (2, 3), ())
    assert equals(apply(h, a * b), apply(h, a) * apply(h, b))
    assert equals(apply(h, a.star()), apply(h, a).star())
    assert equals(apply(h, unit(O(3))), unit(O(2)))


def test_f_inf_images():
    h = f_inf(2)
    assert next(iter(h.image(1).terms))[0] == (1,)
    assert next(iter(h.image(2).terms))[0] == (2,)
    assert next(iter(h.image(3).terms))[0] == (3, 1)
    assert next(iter(h.image(5).terms))[0] == (3, 3, 1)
    assert next(iter(h.image(30).terms))[0] == (3,) * 14 + (2,)


def test_f_inf_isometry_relations_spot_check():
    h = f_inf(3)
    for i in (1, 4, 9):
        for j in (1, 4, 9):
            p = apply(h, mono(O_INF, (), (i,)) * mono(O_INF, (j,), ()))
            expected = unit(O(4)) if i == j else zero(O(4))
            assert equals(p, expected)


def test_q_images_and_rn():
    assert rn(2, 1) == 2 and rn(2, 2) == 4 and rn(2, 3) == 16
    assert rn(3, 2) == 9
    h = q(2, 1)
    assert words(h) == [(1, 1), (1, 2), (2, 1), (2, 2)]
    assert h.domain == O(4) and h.codomain == O(2)


def test_q_validates():
    q(2, 2, validate=True)


def test_prefix_code_validation():
    rep = validate_prefix_code([(1,), (2, 1), (2, 2)], 2)
    assert rep.prefix_free and rep.maximal and rep.kraft_sum == 1
    rep = validate_prefix_code([(1,), (2, 1)], 2)
    assert rep.prefix_free and not rep.maximal
    rep = validate_prefix_code([(1,), (1, 2)], 2)
    assert not rep.prefix_free
    rep = validate_prefix_code([(1,), (1,)], 2)
    assert not rep.prefix_free


def test_invalid_word_images_rejected():
    # images {s1, s2 s1} are prefix-free but not maximal: relations fail
    with pytest.raises(HomError):
        make_hom(O(2), O(2), [mono(O(2), (1,)), mono(O(2), (2, 1))], validate=True)
    # overlapping images break isometry orthogonality
    with pytest.raises(HomError):
        make_hom(O(2), O(2), [mono(O(2), (1,)), mono(O(2), (1, 2))], validate=True)


def test_hom_exists_divisibility_rule():
    # unital hom O_m -> O_n exists iff (n-1) | (m-1)
    assert hom_exists(3, 2)
    assert hom_exists(5, 3)
    assert not hom_exists(4, 3)
    assert hom_exists(2, 2)
    # none into O_inf, always out of it
    assert not hom_exists(2, None)
    assert hom_exists(None, 2)
    assert hom_exists(None, None)


def test_compose_tag_mismatch():
    with pytest.raises(Exception):
        compose(f(1, 2), f(1, 4), validate=False)
