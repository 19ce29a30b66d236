import random

import numpy as np
import pytest

from bidistance.algebra import (GOLAY_GENERATOR_POLY, BinaryField,
                                GeneratorMatrix, _poly_mod,
                                coset_distribution_matrix, defining_set_code,
                                distinct_row_count, dual_code,
                                generator_from_code, golay_code, is_projective,
                                relative_trace, smallest_irreducible,
                                trace_code_27_6, weight_distribution)
from bidistance.core import CapExceeded, Code
from helpers import macwilliams, random_generator_rows


class TestFieldConstruction:
    def test_default_moduli(self):
        assert smallest_irreducible(3) == 0b1011           # x^3 + x + 1
        assert BinaryField(6).modulus == 0b1000011         # x^6 + x + 1

    def test_reducible_modulus_rejected(self):
        with pytest.raises(ValueError, match="reducible"):
            BinaryField(3, 0b1001)  # x^3 + 1 = (x + 1)(x^2 + x + 1)

    def test_degree_checked(self):
        with pytest.raises(ValueError):
            BinaryField(3, 0b10011)

    def test_supported_range(self):
        with pytest.raises(ValueError):
            BinaryField(17)

    def test_default_moduli_give_fields(self):
        # Frobenius fixed-point check: x^(2^m) == x across sampled elements
        rng = random.Random(3)
        for m in range(1, 17):
            f = BinaryField(m)
            for a in {0, 1, f.order - 1, rng.randrange(f.order), rng.randrange(f.order)}:
                assert f.pow(a, f.order) == a


class TestFieldArithmetic:
    def test_hand_product_in_gf8(self):
        f = BinaryField(3, 0b1011)
        assert f.mul(0b010, 0b100) == 0b011  # x * x^2 = x + 1

    def test_multiplicative_identity(self):
        f = BinaryField(5)
        for a in range(f.order):
            assert f.mul(a, 1) == a

    def test_group_order(self):
        f = BinaryField(4)
        for a in range(1, f.order):
            assert f.pow(a, f.order - 1) == 1

    def test_axioms_sampled(self):
        rng = random.Random(13)
        for m in (2, 5, 8, 12):
            f = BinaryField(m)
            for _ in range(40):
                a, b, c = (rng.randrange(f.order) for _ in range(3))
                assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
                assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
            for _ in range(15):
                a = rng.randrange(1, f.order)
                assert f.mul(a, f.inverse(a)) == 1

    def test_range_checked(self):
        f = BinaryField(3)
        with pytest.raises(ValueError):
            f.mul(8, 1)


class TestTraces:
    def test_zero(self):
        assert BinaryField(4).trace(0) == 0

    def test_absolute_trace_balanced_on_gf4(self):
        f = BinaryField(2)
        zeros = [a for a in range(4) if f.trace(a) == 0]
        assert len(zeros) == 2

    def test_linearity_and_surjectivity(self):
        rng = random.Random(19)
        for m in (3, 4, 6):
            f = BinaryField(m)
            assert any(f.trace(a) == 1 for a in range(f.order))
            for _ in range(50):
                a, b = rng.randrange(f.order), rng.randrange(f.order)
                assert f.trace(a ^ b) == f.trace(a) ^ f.trace(b)

    def test_relative_lands_in_subfield(self):
        f = BinaryField(6)
        for a in range(0, f.order, 7):
            t = relative_trace(f, 2, a)
            assert f.pow(t, 4) == t

    def test_tower_requirements(self):
        f = BinaryField(6)
        with pytest.raises(ValueError, match="d | source | m"):
            relative_trace(f, 4, 1)
        with pytest.raises(ValueError, match="subfield"):
            # an element of order 63 generates all of GF(64)
            gen = next(a for a in range(2, 64)
                       if all(f.pow(a, e) != 1 for e in (7, 9, 21)))
            relative_trace(f, 1, gen, source=3)

    def test_subfield_trace_cuts_27_elements(self):
        f = BinaryField(6)
        hits = [x for x in range(1, f.order)
                if relative_trace(f, 1, f.pow(x, 9), source=3) == 0]
        assert len(hits) == 27


class TestDefiningSetCode:
    def test_trace_code_shape(self):
        code = trace_code_27_6()
        assert code.n == 27 and len(code) == 64
        dist = code.weight_distribution()
        assert dist[12] == 36 and dist[16] == 27 and sum(dist) == 64
        assert is_projective(generator_from_code(code))

    def test_tiny_set(self):
        code = defining_set_code(BinaryField(2), [1])
        assert code.n == 1 and sorted(code.words) == [0, 1]

    def test_bad_sets(self):
        f = BinaryField(3)
        with pytest.raises(ValueError):
            defining_set_code(f, [])
        with pytest.raises(ValueError):
            defining_set_code(f, [1, 1])
        with pytest.raises(ValueError):
            defining_set_code(f, [0, 1])


class TestGeneratorMatrix:
    def test_dependent_rows_rejected(self):
        with pytest.raises(ValueError, match="dependent"):
            GeneratorMatrix(3, (0b101, 0b011, 0b110))

    def test_string_round_trip(self):
        g = GeneratorMatrix.from_strings(["1100", "0011"])
        assert g.row_strings() == ["1100", "0011"]
        assert g.k == 2

    def test_codewords(self):
        g = GeneratorMatrix(3, (0b011, 0b100))
        assert sorted(g.codewords().words) == [0, 0b011, 0b100, 0b111]

    def test_generator_from_code_requires_subspace(self):
        with pytest.raises(ValueError, match="subspace"):
            generator_from_code(Code(3, [0, 1, 2]))


class TestGolay:
    def test_generator_divides_modulus(self):
        assert _poly_mod((1 << 23) | 1, GOLAY_GENERATOR_POLY) == 0

    def test_dimensions(self):
        g = golay_code()
        d = dual_code(g)
        assert (g.n, g.k) == (23, 12)
        assert d.k == 11
        assert g.k + d.k == g.n

    def test_dual_weight_enumerator(self):
        dist = weight_distribution(dual_code(golay_code()))
        expected = [0] * 24
        expected[0], expected[8], expected[12], expected[16] = 1, 506, 1288, 253
        assert list(dist) == expected

    def test_double_dual_spans_same_code(self):
        g = golay_code()
        again = dual_code(dual_code(g))
        assert again.codewords() == g.codewords()

    def test_rank_nullity_random(self):
        rng = random.Random(37)
        for _ in range(15):
            n = rng.randrange(3, 12)
            k = rng.randrange(1, n)
            g = GeneratorMatrix(n, tuple(random_generator_rows(rng, n, k)))
            assert dual_code(g).k == n - k


class TestWeightDistribution:
    def test_zero_code(self):
        assert weight_distribution(Code(4, [0])) == (1, 0, 0, 0, 0)

    def test_trace_code_counts(self):
        code = trace_code_27_6()
        assert weight_distribution(generator_from_code(code)) == \
            code.weight_distribution()

    def test_trace_code_antidiagonal_identity(self):
        # pair frequencies summed along antidiagonals recover the weights
        from bidistance.core import bidistance_distribution, weights_from_bidistance
        code = trace_code_27_6()
        assert weights_from_bidistance(bidistance_distribution(code)) == \
            code.weight_distribution()

    def test_dimension_cap(self):
        with pytest.raises(CapExceeded):
            weight_distribution(GeneratorMatrix(40, tuple(1 << i for i in range(30))))

    def test_macwilliams_oracle(self):
        rng = random.Random(43)
        for _ in range(15):
            n = rng.randrange(3, 21)
            k = rng.randrange(1, n)
            g = GeneratorMatrix(n, tuple(random_generator_rows(rng, n, k)))
            assert weight_distribution(dual_code(g)) == \
                macwilliams(weight_distribution(g), n)


class TestProjectivity:
    def test_distinct_nonzero_columns(self):
        assert is_projective(GeneratorMatrix(3, (0b011, 0b110)))

    def test_repeated_column(self):
        assert not is_projective(GeneratorMatrix(3, (0b011, 0b100)))

    def test_zero_column(self):
        assert not is_projective(GeneratorMatrix(3, (0b110, 0b010)))


class TestCosetDistributionMatrix:
    def test_repetition_code_by_hand(self):
        mat = coset_distribution_matrix(GeneratorMatrix(3, (0b111,)))
        assert mat.shape == (4, 4)
        rows = sorted(tuple(int(x) for x in row) for row in mat)
        assert rows == [(0, 1, 1, 0)] * 3 + [(1, 0, 0, 1)]
        assert distinct_row_count(mat) == 2

    def test_full_space_single_coset(self):
        mat = coset_distribution_matrix(GeneratorMatrix(3, (1, 2, 4)))
        assert mat.shape == (1, 4)
        assert list(mat[0]) == [1, 3, 3, 1]

    def test_mass_per_row(self):
        rng = random.Random(47)
        g = GeneratorMatrix(8, tuple(random_generator_rows(rng, 8, 3)))
        mat = coset_distribution_matrix(g)
        assert mat.shape == (32, 9)
        assert np.all(mat.sum(axis=1) == 8)
        assert mat.sum() == 256

    def test_cap(self):
        with pytest.raises(CapExceeded):
            coset_distribution_matrix(GeneratorMatrix(25, (1,)))

    def test_distinct_row_count_exact(self):
        mat = np.array([[1, 2], [1, 2], [2, 1]])
        assert distinct_row_count(mat) == 2
