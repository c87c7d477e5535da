"""Blade combinatorics and Grassmann Hopf structure."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfmat.exterior import (
    Blade,
    Element,
    TensorElement,
    alpha_decode,
    alpha_encode,
    antipode,
    blade_wedge,
    counit,
    grade_project,
    grassmann_coproduct,
    shuffle_splits,
    switch_permutation,
    tensor_mul,
    wedge,
)

E1, E2, E3 = 0b001, 0b010, 0b100


def elements(dim, max_terms=4):
    coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)
    return st.dictionaries(
        st.integers(min_value=0, max_value=(1 << dim) - 1),
        coeff,
        max_size=max_terms,
    ).map(lambda d: Element(dim, d))


class TestBladeWedge:
    def test_sorted_disjoint(self):
        assert blade_wedge(2, E1, E2) == (1, E1 | E2)

    def test_one_transposition(self):
        assert blade_wedge(2, E2, E1) == (-1, E1 | E2)

    def test_nilpotent(self):
        sign, _ = blade_wedge(2, E1, E1)
        assert sign == 0

    def test_three_dim(self):
        assert blade_wedge(3, E1 | E2, E3) == (1, E1 | E2 | E3)


class TestWedge:
    def test_unit_law(self):
        y = Element(2, {0: Fraction(1, 2), 3: Fraction(-2)})
        assert wedge(Element.unit(2), y) == y

    def test_expansion_with_nilpotency(self):
        x = Element(2, {E1: 1, E2: 1})
        y = Element(2, {E1: 1})
        assert wedge(x, y) == Element(2, {E1 | E2: -1})

    def test_dim_mismatch(self):
        with pytest.raises(ValueError):
            wedge(Element.unit(2), Element.unit(3))

    @settings(max_examples=100, deadline=None)
    @given(elements(3), elements(3), elements(3))
    def test_associative(self, x, y, z):
        assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_associative_basis(self, n):
        blades = [Element.blade(n, m) for m in range(1 << n)]
        for x in blades:
            for y in blades:
                for z in blades:
                    assert wedge(wedge(x, y), z) == wedge(x, wedge(y, z))

    def test_graded_anticommutativity(self):
        n = 3
        for mx in range(1 << n):
            for my in range(1 << n):
                x, y = Element.blade(n, mx), Element.blade(n, my)
                sign = (-1) ** (mx.bit_count() * my.bit_count())
                assert wedge(x, y) == sign * wedge(y, x)


class TestCoproduct:
    def test_unit(self):
        assert grassmann_coproduct(Element.unit(1)) == TensorElement(1, {(0, 0): 1})

    def test_generator(self):
        assert grassmann_coproduct(Element.blade(2, E1)) == TensorElement(
            2, {(E1, 0): 1, (0, E1): 1}
        )

    def test_two_blade(self):
        # enumerate the 4 splits with shuffle signs
        expected = TensorElement(
            2, {(E1 | E2, 0): 1, (E1, E2): 1, (E2, E1): -1, (0, E1 | E2): 1}
        )
        assert grassmann_coproduct(Element.blade(2, E1 | E2)) == expected

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_split_count(self, n):
        for mask in range(1 << n):
            delta = grassmann_coproduct(Element.blade(n, mask))
            assert len(delta.coeffs) == 1 << mask.bit_count()

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_coassociative(self, n):
        for mask in range(1 << n):
            delta = grassmann_coproduct(Element.blade(n, mask))
            left, right = {}, {}
            for (s1, s2), c in delta.coeffs.items():
                for (a, b), ci in grassmann_coproduct(
                    Element.blade(n, s1)
                ).coeffs.items():
                    left[(a, b, s2)] = left.get((a, b, s2), 0) + c * ci
                for (b, cc), ci in grassmann_coproduct(
                    Element.blade(n, s2)
                ).coeffs.items():
                    right[(s1, b, cc)] = right.get((s1, b, cc), 0) + c * ci
            assert {k: v for k, v in left.items() if v} == {
                k: v for k, v in right.items() if v
            }

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_compatibility_with_product(self, n):
        # Delta(x ^ y) = sum +- (x1 ^ y1) (x) (x2 ^ y2), graded switch sign
        for mx in range(1 << n):
            for my in range(1 << n):
                x, y = Element.blade(n, mx), Element.blade(n, my)
                lhs = grassmann_coproduct(wedge(x, y))
                rhs = tensor_mul(grassmann_coproduct(x), grassmann_coproduct(y))
                assert lhs == rhs

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_antipode_axiom(self, n):
        for mask in range(1 << n):
            x = Element.blade(n, mask)
            acc = Element.zero(n)
            for (s1, s2), c in grassmann_coproduct(x).coeffs.items():
                acc = acc + c * wedge(
                    antipode(Element.blade(n, s1)), Element.blade(n, s2)
                )
            assert acc == Element(n, {0: counit(x)})


class TestAntipodeCounitGrade:
    def test_antipode_values(self):
        assert antipode(Element.unit(2)) == Element.unit(2)
        assert antipode(Element.blade(2, E1)) == Element.blade(2, E1, -1)
        assert antipode(Element.blade(2, E1 | E2)) == Element.blade(2, E1 | E2)

    def test_counit(self):
        assert counit(Element.unit(1)) == 1
        assert counit(Element.blade(1, E1)) == 0
        assert counit(Element(2, {0: 3, E1 | E2: 5})) == 3

    def test_grade_project(self):
        x = Element(2, {0: 1, E1: 1})
        assert grade_project(x, 0) == Element.unit(2)
        assert grade_project(x, 1) == Element.blade(2, E1)
        assert grade_project(Element.blade(2, E1 | E2), 1).is_zero()

    def test_grade_out_of_range(self):
        with pytest.raises(ValueError):
            grade_project(Element.unit(2), 3)


class TestAlpha:
    def test_dim1_pair_order(self):
        # pair basis order e_{0,0}, e_{1,0}, e_{0,1}, e_{1,1}
        assert alpha_encode(1, 0, 1) == 1
        assert alpha_encode(0, 1, 1) == 2

    def test_decode(self):
        assert alpha_decode(6, 2) == (2, 1)

    def test_roundtrip(self):
        for n in (1, 2, 3):
            for idx in range(1 << (2 * n)):
                assert alpha_encode(*alpha_decode(idx, n), n) == idx

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            alpha_encode(4, 0, 2)
        with pytest.raises(ValueError):
            alpha_decode(16, 1)


class TestSwitchPermutation:
    def test_dim1_swap(self):
        p = switch_permutation(1)
        perm = [int(np.argmax(p[:, i])) for i in range(4)]
        assert perm == [0, 2, 1, 3]

    def test_involution(self):
        p = switch_permutation(2)
        assert (p.dot(p) == np.eye(16, dtype=object)).all()

    @settings(max_examples=25, deadline=None)
    @given(elements(2), elements(2))
    def test_swaps_vectorized_tensors(self, x, y):
        n = 2
        xy = TensorElement(
            n,
            {
                (mx, my): cx * cy
                for mx, cx in x.coeffs.items()
                for my, cy in y.coeffs.items()
            },
        )
        yx = TensorElement(
            n,
            {
                (my, mx): cx * cy
                for mx, cx in x.coeffs.items()
                for my, cy in y.coeffs.items()
            },
        )
        p = switch_permutation(n)
        assert (p.dot(xy.to_vector()) == yx.to_vector()).all()


class TestBlade:
    def test_grade(self):
        assert Blade(3, 0b101).grade == 2
        assert Blade(3, 0).grade == 0

    def test_indices(self):
        assert Blade(3, 0b101).indices == (1, 3)

    def test_mask_bounds(self):
        with pytest.raises(ValueError):
            Blade(2, 4)


def test_shuffle_splits_signs():
    splits = {(s1, s2): sign for s1, s2, sign in shuffle_splits(E1 | E2)}
    assert splits == {(E1 | E2, 0): 1, (E1, E2): 1, (E2, E1): -1, (0, E1 | E2): 1}
