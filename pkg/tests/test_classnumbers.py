from math import gcd, isqrt

import pytest

from cmbounds.classnumbers import (
    SEARCH_NOTE,
    class_number_imag_quadratic,
    discs_with_class_number_at_most,
    is_fundamental_discriminant,
    reduced_forms,
)

CLASS_NUMBER_ONE_FUNDAMENTAL = [-3, -4, -7, -8, -11, -19, -43, -67, -163]


# --- independent oracle: exhaustive generation + textbook reduction loop ---

def reduce_form(a, b, c):
    while True:
        if b > a or b <= -a:
            r = (a - b) // (2 * a)
            c = a * r * r + b * r + c
            b = b + 2 * a * r
        if a > c:
            a, b, c = c, -b, a
            continue
        break
    if b < 0 and (-b == a or a == c):
        b = -b
    return (a, b, c)


def class_number_oracle(d):
    """Count proper classes by reducing every primitive form of disc d with
    a up to |d| (far beyond the reduced range, so every class is hit)."""
    classes = set()
    for a in range(1, -d + 1):
        for b in range(-2 * a, 2 * a + 1):
            num = b * b - d
            if num % (4 * a) != 0:
                continue
            c = num // (4 * a)
            if c <= 0:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            classes.add(reduce_form(a, b, c))
    return len(classes)


def test_reduced_forms_examples():
    assert reduced_forms(-4) == [(1, 0, 1)]
    assert reduced_forms(-3) == [(1, 1, 1)]
    assert reduced_forms(-23) == [(1, 1, 6), (2, -1, 3), (2, 1, 3)]


def test_class_number_examples():
    assert class_number_imag_quadratic(-4) == 1
    assert class_number_imag_quadratic(-163) == 1
    assert class_number_imag_quadratic(-23) == 3


def test_class_number_validation():
    with pytest.raises(ValueError):
        class_number_imag_quadratic(4)
    with pytest.raises(ValueError):
        class_number_imag_quadratic(-5)  # 3 mod 4
    with pytest.raises(ValueError):
        class_number_imag_quadratic(-6)  # 2 mod 4


def test_class_number_vs_reduction_oracle():
    for d in range(-3, -501, -1):
        if d % 4 not in (0, 1):
            continue
        assert class_number_imag_quadratic(d) == class_number_oracle(d), d


def test_reduced_forms_are_reduced_and_primitive():
    for d in range(-3, -301, -1):
        if d % 4 not in (0, 1):
            continue
        for a, b, c in reduced_forms(d):
            assert b * b - 4 * a * c == d
            assert abs(b) <= a <= c
            assert gcd(gcd(a, b), c) == 1
            if abs(b) == a or a == c:
                assert b >= 0
            assert a <= isqrt(-d // 3)


def test_is_fundamental():
    for d in CLASS_NUMBER_ONE_FUNDAMENTAL:
        assert is_fundamental_discriminant(d)
    for d in (-12, -16, -27, -28, -48, -75):
        assert not is_fundamental_discriminant(d)


def test_search_fundamental_filter():
    result = discs_with_class_number_at_most(1, 200, fundamental_only=True)
    assert result.discriminants() == CLASS_NUMBER_ONE_FUNDAMENTAL
    assert all(h == 1 for _, h in result.entries)
    assert result.note == SEARCH_NOTE


def test_search_small_limit():
    result = discs_with_class_number_at_most(1, 10, fundamental_only=True)
    assert result.discriminants() == [-3, -4, -7, -8]


def test_search_unfiltered_includes_nonfundamental():
    result = discs_with_class_number_at_most(1, 30)
    # -12, -16, -27 and -28 have form class number 1 but are not fundamental
    assert result.discriminants() == [-3, -4, -7, -8, -11, -12, -16, -19, -27, -28]


def test_search_validation():
    with pytest.raises(ValueError):
        discs_with_class_number_at_most(0, 100)
    with pytest.raises(ValueError):
        discs_with_class_number_at_most(1, 0)
