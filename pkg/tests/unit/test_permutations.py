"""
[CC-T003] tests.unit.test_permutations
삼중 색인 순열, 축약 행렬, 화환곱 생성원, 이중 잉여류 오라클 단위 테스트

version: 1.0.0
created: 2026-10-17
"""

import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cartancount.core.exceptions import (
    FormatError,
    GuardExceededError,
    MarginError,
    ParamsError,
    ShapeError,
)
from cartancount.core.types import WreathSide
from cartancount.matrices.congruence import are_congruent, canonical_form
from cartancount.matrices.enumerate import iter_margin_matrices
from cartancount.matrices.models import NatMatrix
from cartancount.permutations.models import Params, TriplePermutation, compose, invert
from cartancount.permutations.oracle import UnionFind, double_coset_classes
from cartancount.permutations.reduced import flip_conjugate, lift_matrix, reduced_matrix
from cartancount.permutations.textio import format_permutation, parse_permutation, to_cycles
from cartancount.permutations.wreath import generated_subgroup, wreath_generators, wreath_order


SMALL = [Params(2, 2, 1), Params(2, 3, 1), Params(3, 2, 1), Params(2, 2, 2)]


def _perm(params: Params, images) -> TriplePermutation:
    return TriplePermutation(params, tuple(images))


class TestParams:  # [CC-T003.1]
    def test_flat_layout(self):
        p = Params(2, 3, 2)
        assert p.flat(0, 0, 0) == 0
        assert p.flat(0, 0, 1) == 1
        assert p.flat(0, 1, 0) == 2
        assert p.flat(1, 0, 0) == 6
        assert all(p.flat(*p.triple(x)) == x for x in range(p.size))

    def test_one_based_codec(self):
        p = Params(2, 3, 2)
        assert p.encode(1, 1, 1) == 0
        assert p.encode(2, 3, 2) == 11
        assert p.decode(11) == (2, 3, 2)

    @pytest.mark.parametrize("triple", [(0, 1, 1), (3, 1, 1), (1, 4, 1), (1, 1, 3)])
    def test_encode_out_of_range(self, triple):
        with pytest.raises(ParamsError):
            Params(2, 3, 2).encode(*triple)

    def test_decode_out_of_range(self):
        with pytest.raises(ParamsError):
            Params(2, 3, 2).decode(12)

    @pytest.mark.parametrize("values", [(0, 1, 1), (1, 0, 1), (1, 1, -2)])
    def test_invalid(self, values):
        with pytest.raises(ParamsError):
            Params(*values)

    def test_margin_spec(self):
        spec = Params(2, 3, 2).margin_spec()
        assert (spec.a, spec.b, spec.c, spec.d) == (4, 3, 6, 2)


class TestTriplePermutation:  # [CC-T003.2]
    def test_rejects_non_bijection(self):
        with pytest.raises(ParamsError):
            _perm(Params(2, 2, 1), [0, 0, 1, 2])
        with pytest.raises(ParamsError):
            _perm(Params(2, 2, 1), [0, 1, 2])

    def test_flip(self):
        p = Params(2, 2, 1)
        nu = TriplePermutation.flip(p)
        assert nu.images == (0, 2, 1, 3)
        assert compose(nu, nu).is_identity()

    def test_flip_needs_square(self):
        with pytest.raises(ShapeError):
            TriplePermutation.flip(Params(2, 3, 1))

    def test_apply(self):
        nu = TriplePermutation.flip(Params(2, 2, 2))
        assert nu.apply(0, 1, 1) == (1, 0, 1)

    def test_compose_order(self):
        """compose(f, g)는 g를 먼저 적용."""
        p = Params(1, 3, 1)
        f = _perm(p, [1, 2, 0])
        g = _perm(p, [0, 2, 1])
        assert compose(f, g).images == (1, 0, 2)

    def test_compose_mismatch(self):
        with pytest.raises(ParamsError):
            compose(
                TriplePermutation.identity(Params(2, 2, 1)),
                TriplePermutation.identity(Params(1, 4, 1)),
            )

    @settings(max_examples=100, deadline=None)
    @given(images=st.permutations(range(8)))
    def test_invert(self, images):
        sigma = _perm(Params(2, 2, 2), images)
        assert compose(sigma, invert(sigma)).is_identity()
        assert compose(invert(sigma), sigma).is_identity()


class TestReducedMatrix:  # [CC-T003.3]
    def test_identity_and_flip(self):
        p = Params(2, 2, 1)
        assert reduced_matrix(TriplePermutation.identity(p)).to_rows() == [[1, 1], [1, 1]]
        assert reduced_matrix(TriplePermutation.flip(p)).to_rows() == [[2, 0], [0, 2]]

    def test_identity_rectangular(self):
        reduced = reduced_matrix(TriplePermutation.identity(Params(3, 2, 1)))
        assert reduced.to_rows() == [[1, 1], [1, 1], [1, 1]]

    def test_identity_with_depth(self):
        """o > 1 이면 항등의 축약 행렬은 k 대각 블록."""
        reduced = reduced_matrix(TriplePermutation.identity(Params(2, 2, 2)))
        assert reduced.to_rows() == [
            [1, 0, 1, 0],
            [0, 1, 0, 1],
            [1, 0, 1, 0],
            [0, 1, 0, 1],
        ]

    @settings(max_examples=200, deadline=None)
    @given(data=st.data())
    def test_margins(self, data):
        params = data.draw(st.sampled_from(SMALL))
        sigma = _perm(params, data.draw(st.permutations(range(params.size))))
        assert params.margin_spec().contains(reduced_matrix(sigma))


class TestLift:  # [CC-T003.4]
    @pytest.mark.parametrize("params", [*SMALL, Params(3, 3, 1)])
    def test_round_trip(self, params):
        for matrix in iter_margin_matrices(params.margin_spec()):
            assert reduced_matrix(lift_matrix(matrix, params)) == matrix

    def test_rejects_outside_space(self):
        with pytest.raises(MarginError):
            lift_matrix(NatMatrix.from_rows([[2, 1], [0, 1]]), Params(2, 2, 1))


class TestFlipConjugate:  # [CC-T003.5]
    def test_transpose_law_exhaustive(self):
        """Sym(4) 전체에서 축약 행렬이 전치됩니다."""
        p = Params(2, 2, 1)
        for images in itertools.permutations(range(4)):
            sigma = _perm(p, images)
            assert reduced_matrix(flip_conjugate(sigma)) == reduced_matrix(sigma).transpose()

    @settings(max_examples=100, deadline=None)
    @given(images=st.permutations(range(9)))
    def test_transpose_law_sampled(self, images):
        sigma = _perm(Params(3, 3, 1), images)
        assert reduced_matrix(flip_conjugate(sigma)) == reduced_matrix(sigma).transpose()

    @settings(max_examples=100, deadline=None)
    @given(images=st.permutations(range(8)))
    def test_transpose_law_with_depth(self, images):
        sigma = _perm(Params(2, 2, 2), images)
        assert reduced_matrix(flip_conjugate(sigma)) == reduced_matrix(sigma).transpose()

    def test_needs_square(self):
        with pytest.raises(ShapeError):
            flip_conjugate(TriplePermutation.identity(Params(2, 3, 1)))


class TestWreath:  # [CC-T003.6]
    @pytest.mark.parametrize("params", [*SMALL, Params(1, 3, 2)])
    @pytest.mark.parametrize("side", [WreathSide.LEFT, WreathSide.RIGHT])
    def test_generated_order(self, params, side):
        group = generated_subgroup(wreath_generators(params, side), params)
        assert len(group) == wreath_order(params, side)

    def test_orders(self):
        assert wreath_order(Params(2, 2, 1), WreathSide.LEFT) == 8
        assert wreath_order(Params(2, 3, 1), WreathSide.LEFT) == 72
        assert wreath_order(Params(2, 3, 1), WreathSide.RIGHT) == 48
        assert wreath_order(Params(2, 2, 2), WreathSide.RIGHT) == 384

    def test_trivial_group(self):
        p = Params(1, 1, 1)
        gens = wreath_generators(p, WreathSide.LEFT)
        assert len(gens) == 1
        assert gens[0].is_identity()
        assert generated_subgroup(gens, p) == {(0,)}

    @settings(max_examples=100, deadline=None)
    @given(data=st.data())
    def test_double_coset_moves_preserve_class(self, data):
        """좌우 화환곱 원소를 곱해도 축약 행렬의 (전치 없는) 합동류가 그대로."""
        params = data.draw(st.sampled_from([Params(2, 2, 1), Params(2, 3, 1), Params(2, 2, 2)]))
        sigma = _perm(params, data.draw(st.permutations(range(params.size))))
        left = wreath_generators(params, WreathSide.LEFT)
        right = wreath_generators(params, WreathSide.RIGHT)
        moved = sigma
        for _ in range(data.draw(st.integers(min_value=0, max_value=6))):
            moved = compose(data.draw(st.sampled_from(left)), moved)
            moved = compose(moved, data.draw(st.sampled_from(right)))
        assert are_congruent(
            reduced_matrix(moved), reduced_matrix(sigma), allow_transpose=False
        )

    def test_guard(self):
        p = Params(2, 5, 1)
        with pytest.raises(GuardExceededError):
            generated_subgroup(wreath_generators(p, WreathSide.LEFT), p)


class TestUnionFind:  # [CC-T003.7]
    def test_merges(self):
        uf = UnionFind(5)
        uf.union(0, 1)
        uf.union(3, 4)
        uf.union(1, 4)
        assert uf.find(0) == uf.find(3)
        assert uf.find(2) != uf.find(0)
        assert uf.size[uf.find(0)] == 4


class TestOracle:  # [CC-T003.8]
    def test_two_by_two(self):
        """(2,2,1): 전치 유무와 관계없이 2류, 한쪽 잉여류는 24 / 8 = 3개."""
        p = Params(2, 2, 1)
        plain = double_coset_classes(p)
        flipped = double_coset_classes(p, identify_flip=True)
        assert plain.count == 2
        assert flipped.count == 2
        assert plain.coset_count == 3
        assert sum(plain.sizes) == 24

    def test_rectangular(self):
        result = double_coset_classes(Params(2, 3, 1), identify_flip=True)
        assert result.count == 2
        assert result.flip_identified is False
        assert sum(result.sizes) == math.factorial(6)

    def test_representatives_sorted(self, params_221):
        result = double_coset_classes(params_221)
        assert result.representatives[0].is_identity()
        images = [r.images for r in result.representatives]
        assert images == sorted(images)

    def test_representative_classes_distinct(self):
        p = Params(2, 2, 2)
        result = double_coset_classes(p)
        keys = {canonical_form(reduced_matrix(r), False) for r in result.representatives}
        assert len(keys) == result.count

    def test_one_point(self):
        result = double_coset_classes(Params(1, 1, 1))
        assert result.count == 1
        assert result.sizes == [1]

    def test_guard(self):
        with pytest.raises(GuardExceededError) as exc_info:
            double_coset_classes(Params(2, 5, 1))
        assert exc_info.value.bound == "oracle_max_points"


class TestPermutationText:  # [CC-T003.9]
    def test_format(self):
        nu = TriplePermutation.flip(Params(2, 2, 1))
        assert format_permutation(nu) == "2 2 1\n1 3 2 4\n"

    def test_cycles(self):
        assert to_cycles(TriplePermutation.flip(Params(2, 2, 1))) == "(2 3)"
        assert to_cycles(TriplePermutation.identity(Params(2, 2, 1))) == "()"

    @settings(max_examples=50, deadline=None)
    @given(images=st.permutations(range(6)))
    def test_parse_both_notations(self, images):
        sigma = _perm(Params(2, 3, 1), images)
        assert parse_permutation(format_permutation(sigma)) == sigma
        assert parse_permutation(f"2 3 1\n{to_cycles(sigma)}\n") == sigma

    @pytest.mark.parametrize(
        "text",
        [
            "",
            "2 2 1\n1 1 2 3\n",
            "2 2\n1 2 3 4\n",
            "2 2 1\n(1 5)\n",
            "2 2 1\n(1 2) 3\n",
            "2 2 1\n(1 2)(2 3)\n",
        ],
    )
    def test_parse_errors(self, text):
        with pytest.raises(FormatError):
            parse_permutation(text)
