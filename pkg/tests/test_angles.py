from fractions import Fraction

import pytest

from angulated import (
    Angle,
    BadDistance,
    Morphism,
    ShapeMismatch,
    SumObject,
    ZERO_OBJ,
    basis_mor,
    check_d_cokernel,
    check_d_exact,
    check_d_kernel,
    check_hom_exactness,
    d_cokernel,
    d_exact_seq,
    d_kernel,
    direct_sum,
    extend,
    identity_mor,
    indec,
    is_radical,
    join_pos,
    min_angle,
    rotate_left,
    rotate_right,
    shift_angle,
    shift_mor,
    trivial_angle,
    zero_mor,
)

from oracles import angle_objects


class TestTrivialAngle:
    def test_on_a_vertex(self, p449):
        a = trivial_angle(p449, indec(1))
        assert angle_objects(p449, a) == [1, 1, None, None, None, None]
        assert a.maps[0] == identity_mor(p449, indec(1))
        assert all(m.is_zero for m in a.maps[1:])

    def test_on_zero(self, p449):
        a = trivial_angle(p449, ZERO_OBJ)
        assert all(o.is_zero for o in a.objects)
        assert check_hom_exactness(a).ok

    def test_on_a_sum(self, p449):
        x = SumObject((1, 2))
        a = trivial_angle(p449, x)
        assert a.objects[0] == a.objects[1] == x
        assert check_hom_exactness(a).ok


class TestRotations:
    def test_round_trips(self, p449):
        a = min_angle(basis_mor(p449, 9, 10))
        assert rotate_left(rotate_right(a)) == a
        assert rotate_right(rotate_left(a)) == a

    def test_rotate_right_of_first_golden_angle(self, p449):
        # right rotation of the angle ending at f1 starts one period down
        a = min_angle(basis_mor(p449, 0, 1))
        r = rotate_right(a)
        assert angle_objects(p449, r) == [-11, -8, -7, -4, -3, 0]
        assert check_hom_exactness(r).ok

    def test_full_rotation_is_shift(self, p449):
        for a in (
            trivial_angle(p449, indec(1)),
            min_angle(basis_mor(p449, 3, 6)),
        ):
            b = a
            for _ in range(p449.d + 2):
                b = rotate_left(b)
            assert b == shift_angle(a, 1)


class TestDirectSum:
    def test_zero_angle_is_neutral(self, p449):
        a = min_angle(basis_mor(p449, 4, 5))
        z = trivial_angle(p449, ZERO_OBJ)
        assert direct_sum(a, z) == a

    def test_trivial_angles_add(self, p449):
        got = direct_sum(trivial_angle(p449, indec(1)), trivial_angle(p449, indec(2)))
        assert got == trivial_angle(p449, SumObject((1, 2)))

    def test_sum_with_golden_angle_stays_exact(self, p449):
        a = min_angle(basis_mor(p449, 4, 5))  # the angle ending at f5
        s = direct_sum(a, trivial_angle(p449, indec(3)))
        assert check_hom_exactness(s).ok


class TestMinAngle:
    def test_golden_angle_ending_at_f10(self, p449):
        a = min_angle(basis_mor(p449, 9, 10))
        assert angle_objects(p449, a) == [1, 2, 5, 6, 9, 10]
        expected = [(1, 2), (2, 5), (5, 6), (6, 9), (9, 10), (10, 13)]
        assert list(a.maps) == [basis_mor(p449, x, y) for x, y in expected]

    def test_golden_angle_ending_at_f5(self, p449):
        a = min_angle(basis_mor(p449, 4, 5))
        assert angle_objects(p449, a) == [-4, -3, 0, 1, 4, 5]

    def test_derived_angle_on_distance_three(self, p449):
        # positions {j - r*l} u {i - r*l} = {6, 2, -2} u {3, -1, -5}
        a = min_angle(basis_mor(p449, 3, 6))
        assert angle_objects(p449, a) == [-5, -2, -1, 2, 3, 6]
        assert check_hom_exactness(a).ok

    def test_distance_zero_contracts(self, p449):
        mu = identity_mor(p449, indec(4))
        a = min_angle(mu)
        assert angle_objects(p449, a) == [4, 4, None, None, None, None]
        assert check_hom_exactness(a).ok

    def test_bad_distance(self, p449):
        with pytest.raises(BadDistance):
            min_angle(zero_mor(p449, indec(1), indec(2)))
        with pytest.raises(BadDistance):
            min_angle(zero_mor(p449, SumObject((1, 2)), indec(2)))

    def test_structure_of_every_admissible_angle(self, any_params):
        p = any_params
        for i in range(1, p.period + 1):
            for delta in range(1, p.l):
                mu = basis_mor(p, i, i + delta)
                a = min_angle(mu)
                nonzero = [o for o in a.objects if not o.is_zero]
                assert len(nonzero) == p.d + 2
                assert all(o.is_indec for o in nonzero)
                gaps = [
                    b.summands[0] - a_.summands[0]
                    for a_, b in zip(a.objects, a.objects[1:])
                ]
                assert gaps == [
                    delta if k % 2 == 0 else p.l - delta for k in range(p.d + 1)
                ]
                span = a.objects[-1].summands[0] - a.objects[0].summands[0]
                assert span == p.m - 1 + delta
                assert all(is_radical(a.maps[k]) for k in range(1, p.d))
                assert not a.connecting.is_zero
                assert min_angle(shift_mor(mu, 2)) == shift_angle(a, 2)

    def test_exactness_of_every_admissible_angle(self, p449):
        for i in range(1, p449.period + 1):
            for delta in range(1, p449.l):
                assert check_hom_exactness(min_angle(basis_mor(p449, i, i + delta))).ok


class TestExtend:
    def test_connecting_map_of_golden_angle(self, p449):
        # extending f10 -> shifted f1 recovers the angle ending at f10
        delta = basis_mor(p449, 10, 13)
        a = extend(delta)
        assert a == min_angle(basis_mor(p449, 9, 10))
        assert a.connecting == delta

    def test_zero_connector_splits(self, p449):
        delta = zero_mor(p449, indec(3), indec(join_pos(p449, 1, 1)))
        a = extend(delta)
        assert angle_objects(p449, a) == [1, 1, None, None, 3, 3]
        assert a.connecting.is_zero
        assert a.maps[0] == identity_mor(p449, indec(1))
        assert a.maps[p449.d] == identity_mor(p449, indec(3))
        assert check_hom_exactness(a).ok

    def test_distance_two_connector(self, p449):
        # f12 -> shifted f2: middle ladder runs over even positions
        a = extend(basis_mor(p449, 12, join_pos(p449, 1, 2)))
        assert angle_objects(p449, a) == [2, 4, 6, 8, 10, 12]
        assert check_hom_exactness(a).ok

    def test_blockwise_connector(self, p449):
        delta = Morphism(
            p449,
            SumObject((10, 12)),
            SumObject((13, 14)),
            ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))),
        )
        a = extend(delta)
        assert a.connecting == delta
        assert check_hom_exactness(a).ok

    def test_entangled_connector_rejected(self, p449):
        bad = Morphism(
            p449, SumObject((10, 12)), indec(13), ((Fraction(1), Fraction(1)),)
        )
        with pytest.raises(ShapeMismatch):
            extend(bad)


class TestWindowChains:
    def test_kernel_chain(self, p449):
        chain = d_kernel(p449, 3, 6)
        got = [None if o.is_zero else o.summands[0] for o in chain.objects]
        assert got == [None, None, None, 2, 3]

    def test_cokernel_chain(self, p449):
        chain = d_cokernel(p449, 3, 6)
        got = [None if o.is_zero else o.summands[0] for o in chain.objects]
        assert got == [6, 7, 10, 11, None]

    def test_exact_chain(self, p449):
        chain = d_exact_seq(p449, 9, 10)
        assert [o.summands[0] for o in chain.objects] == [1, 2, 5, 6, 9, 10]

    def test_chains_pass_definition_oracles(self, any_params):
        p = any_params
        for i in range(1, p.period + 1):
            for j in range(i + 1, min(i + p.l, p.period + 1)):
                mu = basis_mor(p, i, j)
                assert check_d_kernel(d_kernel(p, i, j), mu)
                assert check_d_cokernel(d_cokernel(p, i, j), mu)
                exact = d_exact_seq(p, i, j)
                assert check_d_exact(exact)
                assert sum(1 for o in exact.objects if not o.is_zero) == p.d + 2

    def test_bad_pairs_rejected(self, p449):
        with pytest.raises(BadDistance):
            d_kernel(p449, 3, 3)
        with pytest.raises(BadDistance):
            d_cokernel(p449, 3, 7)  # distance l
        with pytest.raises(BadDistance):
            d_exact_seq(p449, 0, 2)

    def test_tampered_chain_fails(self, p449):
        chain = d_kernel(p449, 3, 6)
        objects = list(chain.objects)
        objects[3] = ZERO_OBJ  # drop f2 from the ladder
        maps = list(chain.maps)
        maps[2] = zero_mor(p449, objects[2], objects[3])
        maps[3] = zero_mor(p449, objects[3], objects[4])
        broken = type(chain)(p449, "kernel", tuple(objects), tuple(maps))
        assert not check_d_kernel(broken, basis_mor(p449, 3, 6))


class TestHomExactnessOracle:
    def test_golden_angle_passes(self, p449):
        assert check_hom_exactness(min_angle(basis_mor(p449, 0, 1))).ok

    def test_zero_angle_passes(self, p449):
        assert check_hom_exactness(trivial_angle(p449, ZERO_OBJ)).ok

    def test_tampered_angle_fails_with_witness(self, p449):
        a = min_angle(basis_mor(p449, 4, 5))
        maps = list(a.maps)
        maps[2] = zero_mor(p449, a.objects[2], a.objects[3])
        report = check_hom_exactness(Angle(p449, a.objects, tuple(maps)))
        assert not report.ok
        assert report.failures
        # the zeroed map sits at slots d+2+2, d+2+3 of the extended complex
        assert any(slot in {p449.d + 4, p449.d + 5} for _, slot in report.failures)


class TestAngleValidation:
    def test_nonzero_consecutive_composite_rejected(self, p449):
        # f1 -> f2 -> f3 survives (distance 2 < l), so this is no angle
        with pytest.raises(ValueError, match="consecutive"):
            Angle(
                p449,
                (indec(1), indec(2), indec(3), ZERO_OBJ, ZERO_OBJ, indec(12)),
                (
                    basis_mor(p449, 1, 2),
                    basis_mor(p449, 2, 3),
                    zero_mor(p449, indec(3), ZERO_OBJ),
                    zero_mor(p449, ZERO_OBJ, ZERO_OBJ),
                    zero_mor(p449, ZERO_OBJ, indec(12)),
                    basis_mor(p449, 12, 13),
                ),
            )

    def test_misaligned_maps_rejected(self, p449):
        a = min_angle(basis_mor(p449, 9, 10))
        maps = list(a.maps)
        maps[1] = basis_mor(p449, 2, 4)  # wrong target slot
        with pytest.raises(ShapeMismatch):
            Angle(p449, a.objects, tuple(maps))

    def test_wrap_composite_checked(self, p449):
        # the first map must kill the unshifted connecting map: here the
        # composite s-1:f12 -> f1 -> f2 has distance 2 and survives
        with pytest.raises(ValueError, match="wrap"):
            Angle(
                p449,
                (indec(1), indec(2), ZERO_OBJ, ZERO_OBJ, ZERO_OBJ, indec(12)),
                (
                    basis_mor(p449, 1, 2),
                    zero_mor(p449, indec(2), ZERO_OBJ),
                    zero_mor(p449, ZERO_OBJ, ZERO_OBJ),
                    zero_mor(p449, ZERO_OBJ, ZERO_OBJ),
                    zero_mor(p449, ZERO_OBJ, indec(12)),
                    basis_mor(p449, 12, 13),
                ),
            )
