import json

import pytest

from twistlab.braid import build_diagram
from twistlab.complexes import (
    ChainMap,
    complex_from_json_obj,
    complex_to_json_obj,
    cone,
    cone_triangle,
    direct_sum,
    euler_characteristic,
    hom_complex,
    hom_dims,
    make_complex,
    minimize,
    profile,
    profile_key,
    profiles_equal,
    projective,
    shift,
    sum_of_projectives,
)
from twistlab.fields import GF2, QQ
from twistlab.zigzag import ZigzagAlgebra

A2 = build_diagram("A", 2)
A3 = build_diagram("A", 3)


@pytest.fixture(params=[GF2, QQ], ids=["gf2", "qq"])
def alg(request):
    return ZigzagAlgebra(A2, request.param)


def arrow_cone(algebra, i, j):
    """cone(arrow: P_i -> P_j): P_i in degree -1, P_j in degree 0."""
    return make_complex(
        algebra,
        {-1: (i,), 0: (j,)},
        {-1: ((algebra.arrow(i, j),),)},
    )


class TestConstructors:
    def test_projective_stalk(self, alg):
        p = projective(alg, 1)
        assert p.summands == {0: (1,)}
        assert hom_dims(1, p) == {0: 2}

    def test_sum_of_projectives(self, alg):
        lam = sum_of_projectives(alg)
        assert lam.summands == {0: (1, 2)}
        assert hom_dims(1, lam) == {0: 3}

    def test_shift_moves_degrees(self, alg):
        p = projective(alg, 1)
        assert shift(p, 1).summands == {-1: (1,)}
        assert shift(shift(p, 1), -1).summands == p.summands

    def test_shift_sign_involutive(self, alg):
        c = arrow_cone(alg, 1, 2)
        back = shift(shift(c, 1), -1)
        assert back.key() == c.key()
        shifted = shift(c, 1)
        shifted.check()

    def test_direct_sum(self, alg):
        lam = sum_of_projectives(alg)
        both = direct_sum(projective(alg, 1), projective(alg, 2))
        assert both.summands == lam.summands
        assert profiles_equal(both, lam)

    def test_direct_sum_profile_additive(self, alg):
        x = arrow_cone(alg, 1, 2)
        y = projective(alg, 1)
        s = direct_sum(x, y)
        px, py, ps = profile(x), profile(y), profile(s)
        keys = set(px) | set(py)
        assert {k: px.get(k, 0) + py.get(k, 0) for k in keys} == ps

    def test_zero_map_cone_is_the_target(self, alg):
        zero = make_complex(alg, {}, {})
        f = ChainMap(zero, projective(alg, 2), {})
        assert cone(f).summands == {0: (2,)}


class TestCone:
    def test_cone_of_identity_minimizes_to_zero(self, alg):
        p = projective(alg, 1)
        f = ChainMap(p, p, {0: ((alg.identity(1),),)})
        c = cone(f)
        c.check()
        assert minimize(c).is_zero()

    def test_cone_of_arrow(self, alg):
        p1, p2 = projective(alg, 1), projective(alg, 2)
        f = ChainMap(p1, p2, {0: ((alg.arrow(1, 2),),)})
        c = cone(f)
        c.check()
        assert c.summands == {-1: (1,), 0: (2,)}
        assert hom_dims(1, c) == {-1: 1}
        assert hom_dims(2, c) == {0: 1}

    def test_cone_triangle_maps_are_chain_maps(self, alg):
        p1, p2 = projective(alg, 1), projective(alg, 2)
        f = ChainMap(p1, p2, {0: ((alg.arrow(1, 2),),)})
        c, inc, proj = cone_triangle(f)
        assert inc.is_valid()
        assert proj.is_valid()

    def test_invalid_chain_map_rejected(self, alg):
        x = arrow_cone(alg, 1, 2)
        p2 = projective(alg, 2)
        bad = ChainMap(p2, x, {0: ((alg.identity(2),), (alg.zero(2, 2),))})
        # wrong shape: rows must follow the target's summands
        with pytest.raises((ValueError, IndexError)):
            cone(bad)

    def test_non_commuting_square_rejected(self):
        algebra = ZigzagAlgebra(A2, QQ)
        x = arrow_cone(algebra, 1, 2)
        y = projective(algebra, 2)
        # the only degree-0 block sends P_2 -> P_2 by the identity, but then
        # the square with x's differential does not commute
        f = ChainMap(x, y, {0: ((algebra.identity(2),),), -1: ()})
        assert not f.is_valid()
        with pytest.raises(ValueError):
            cone(f)


class TestMinimize:
    def test_removes_identity_component(self, alg):
        c = make_complex(
            alg,
            {-1: (1,), 0: (1,)},
            {-1: ((alg.identity(1),),)},
        )
        assert minimize(c).is_zero()

    def test_loop_differential_stays(self, alg):
        c = make_complex(alg, {-1: (1,), 0: (1,)}, {-1: ((alg.loop(1),),)})
        m = minimize(c)
        assert m.summands == c.summands

    def test_unit_plus_loop_is_still_removable(self, alg):
        one = alg.field.one
        entry = alg.add(alg.identity(1), alg.loop(1))
        c = make_complex(alg, {-1: (1,), 0: (1,)}, {-1: ((entry,),)})
        assert minimize(c).is_zero()

    def test_correction_term(self):
        # 2x2 block with one unit pivot leaves the Gaussian complement behind
        algebra = ZigzagAlgebra(A2, QQ)
        mat = (
            (algebra.identity(1), algebra.identity(1)),
            (algebra.identity(1), algebra.identity(1).scaled(QQ.from_int(2))),
        )
        c = make_complex(algebra, {-1: (1, 1), 0: (1, 1)}, {-1: mat})
        m = minimize(c)
        assert m.is_zero()  # determinant 1: both pairs cancel

    def test_correction_leaves_loop(self):
        algebra = ZigzagAlgebra(A2, QQ)
        mat = (
            (algebra.identity(1), algebra.identity(1)),
            (algebra.identity(1), algebra.add(algebra.identity(1), algebra.loop(1))),
        )
        c = make_complex(algebra, {-1: (1, 1), 0: (1, 1)}, {-1: mat})
        m = minimize(c)
        # delta - gamma phi^-1 beta = (id + loop) - id = loop
        assert m.summands == {-1: (1,), 0: (1,)}
        assert m.diffs[-1][0][0].terms == algebra.loop(1).terms

    def test_idempotent_and_profile_preserving(self, alg):
        lam = sum_of_projectives(alg)
        c = direct_sum(
            arrow_cone(alg, 1, 2),
            make_complex(alg, {-1: (1,), 0: (1,)}, {-1: ((alg.identity(1),),)}),
        )
        m = minimize(c)
        assert m.key() == minimize(m).key()
        assert profile(c) == profile(m)
        for j in alg.diagram.vertices:
            assert euler_characteristic(j, c) == euler_characteristic(j, m)

    def test_d_squared_after_minimize(self, alg):
        c = direct_sum(arrow_cone(alg, 1, 2), shift(arrow_cone(alg, 2, 1), 1))
        minimize(c).check()


class TestHomComplex:
    def test_stalk(self, alg):
        hc = hom_complex(1, projective(alg, 1))
        assert hc.dim(0) == 2
        assert hc.mats == {}

    def test_postcomposition_rank(self, alg):
        c = arrow_cone(alg, 1, 2)
        hc = hom_complex(1, c)
        assert hc.dim(-1) == 2 and hc.dim(0) == 1
        assert hc.rank_at(-1) == 1

    def test_non_adjacent_zero_complex(self):
        algebra = ZigzagAlgebra(A3)
        hc = hom_complex(3, projective(algebra, 1))
        assert hc.basis == {}

    def test_hom_dims_examples(self, alg):
        c = arrow_cone(alg, 1, 2)
        assert hom_dims(1, c) == {-1: 1}
        assert hom_dims(2, c) == {0: 1}

    def test_shift_compatibility(self, alg):
        c = arrow_cone(alg, 1, 2)
        shifted = shift(c, 1)
        for j in alg.diagram.vertices:
            base = hom_dims(j, c)
            moved = hom_dims(j, shifted)
            assert moved == {d - 1: h for d, h in base.items()}


class TestProfiles:
    def test_reflexive(self, alg):
        c = arrow_cone(alg, 1, 2)
        assert profiles_equal(c, c)

    def test_distinguishes_stalks(self, alg):
        assert not profiles_equal(projective(alg, 1), projective(alg, 2))

    def test_mismatched_algebras_rejected(self):
        with pytest.raises(ValueError):
            profiles_equal(projective(ZigzagAlgebra(A2), 1), projective(ZigzagAlgebra(A3), 1))

    def test_profile_key_ignores_summand_order(self, alg):
        a = direct_sum(projective(alg, 1), projective(alg, 2))
        b = direct_sum(projective(alg, 2), projective(alg, 1))
        assert profile_key(a) == profile_key(b)


class TestSerialization:
    def test_roundtrip(self, alg):
        c = direct_sum(arrow_cone(alg, 1, 2), shift(projective(alg, 1), 2))
        obj = complex_to_json_obj(c)
        text = json.dumps(obj)
        back = complex_from_json_obj(alg, json.loads(text))
        assert back.key() == c.key()

    def test_entry_typing_checked(self, alg):
        obj = {
            "degrees": {"-1": [1], "0": [2]},
            "diffs": {"-1": [[{"src": 2, "tgt": 1, "terms": []}]]},
        }
        with pytest.raises(ValueError):
            complex_from_json_obj(alg, obj)

    def test_d_squared_checked_on_load(self):
        algebra = ZigzagAlgebra(A2, QQ)
        obj = {
            "degrees": {"-1": [1], "0": [1], "1": [1]},
            "diffs": {
                "-1": [[{"src": 1, "tgt": 1, "terms": [{"kind": "id", "coef": "1"}]}]],
                "0": [[{"src": 1, "tgt": 1, "terms": [{"kind": "id", "coef": "1"}]}]],
            },
        }
        with pytest.raises(AssertionError):
            complex_from_json_obj(algebra, obj)
