import random
from fractions import Fraction

import pytest

from qbranch.branching import (
    L1Vector,
    classical_gt_graph,
    gtq_graph,
    phi_pushdown,
    pushdown_chain,
    young_graph,
)
from qbranch.errors import GraphMismatch, LevelMismatch, NotProbability
from qbranch.harmonic import (
    CoherentSystem,
    KMSStateShadow,
    adjoint_system,
    character_product,
    character_product_system,
    check_harmonic,
    convex_mix,
    counit_system,
    ergodic_estimate,
    from_top,
    system_from_json,
    system_to_json,
)
from qbranch.scalars import QRatio, LaurentPoly, qratio_eq, scalars_equal
from qbranch.signatures import dim_syt, partitions_of
from qbranch.symfunc import lr_tensor, qdim

Q9 = Fraction(9, 10)


def _factorial(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def test_counit_passes_everywhere():
    for g in (gtq_graph(-1, Q9), gtq_graph(-1), gtq_graph(+1, Q9),
              classical_gt_graph(), young_graph()):
        assert check_harmonic(counit_system(g, 4)).ok


def test_from_top_examples():
    g = gtq_graph(-1, Q9)
    nu = from_top(g, L1Vector.delta(2, (1, 0)))
    assert nu.vector(1)[(1,)] == 1 / (1 + Q9**2)
    assert nu.vector(1)[(0,)] == Q9**2 / (1 + Q9**2)
    assert check_harmonic(nu).ok
    # convex combination of pushdowns = pushdown of convex combination
    two = L1Vector(2, {(1, 0): Fraction(1, 2), (0, 0): Fraction(1, 2)})
    nu2 = from_top(g, two)
    half = convex_mix(nu, from_top(g, L1Vector.delta(2, (0, 0))), Fraction(1, 2))
    for n in range(3):
        assert nu2.vector(n) == half.vector(n)


def test_from_top_rejects_non_probability():
    g = gtq_graph(-1, Q9)
    with pytest.raises(NotProbability):
        from_top(g, L1Vector(1, {(1,): Fraction(1, 2)}))
    with pytest.raises(NotProbability):
        from_top(g, L1Vector(1, {(1,): Fraction(3, 2), (0,): Fraction(-1, 2)}))


def test_check_harmonic_rejects_perturbation():
    g = gtq_graph(-1, Q9)
    nu = from_top(g, L1Vector.delta(3, (1, 0, 0)))
    vecs = [nu.vector(n) for n in range(4)]
    lam = next(iter(vecs[1].support()))
    broken = CoherentSystem(g, vecs[:1] + [vecs[1].add(
        L1Vector(1, {lam: Fraction(1, 1000)}))] + vecs[2:])
    verdict = check_harmonic(broken)
    assert not verdict.ok
    kinds = {f[0] for f in verdict.failures}
    assert "mass" in kinds or "harmonic" in kinds


def test_symbolic_from_top():
    g = gtq_graph(-1)
    nu = from_top(g, L1Vector.delta(2, (1, 0)))
    assert check_harmonic(nu).ok
    one = LaurentPoly.one()
    q2 = LaurentPoly.q_power(2)
    assert qratio_eq(nu.vector(1)[(1,)], QRatio(one, one + q2))


def test_plancherel_family_small():
    yg = young_graph()
    for n_top in range(0, 7):
        top = L1Vector(n_top, {lam: Fraction(dim_syt(lam) ** 2, _factorial(n_top))
                               for lam in partitions_of(n_top)})
        assert check_harmonic(from_top(yg, top)).ok


def test_character_product_neutral_and_mass():
    g = gtq_graph(-1, Q9)
    nu = from_top(g, L1Vector.delta(2, (1, 0)))
    eps = counit_system(g, 2)
    for n in range(3):
        assert character_product(nu, eps, n) == nu.vector(n)
        assert character_product(eps, nu, n) == nu.vector(n)
        assert character_product(nu, nu, n).mass() == 1


def test_character_product_worked_value():
    # nu = delta-pushdown of (1,0); at level 2 the product weight on (1,1)
    # is lr_tensor((1,1),(1,0),(1,0)) qdim((1,1)) / qdim((1,0))^2 = q^2/(1+q^2)^2
    g = gtq_graph(-1, Q9)
    nu = from_top(g, L1Vector.delta(2, (1, 0)))
    prod = character_product(nu, nu, 2)
    expected = Q9**2 / (1 + Q9**2) ** 2
    assert prod[(1, 1)] == expected
    assert lr_tensor((1, 1), (1, 0), (1, 0)) == 1


def test_character_product_family_is_harmonic():
    # the levelwise product family is itself Phi-compatible (checked, not assumed)
    g = gtq_graph(-1, Q9)
    nu1 = from_top(g, L1Vector.delta(3, (2, 1, 0)))
    nu2 = from_top(g, L1Vector.delta(3, (1, 0, -1)))
    prod = character_product_system(nu1, nu2)
    assert check_harmonic(prod).ok


def test_character_product_graph_mismatch():
    nu1 = from_top(gtq_graph(-1, Q9), L1Vector.delta(1, (1,)))
    nu2 = from_top(gtq_graph(-1, Fraction(1, 2)), L1Vector.delta(1, (1,)))
    with pytest.raises(GraphMismatch):
        character_product(nu1, nu2, 1)


def test_adjoint_system():
    g = gtq_graph(-1, Q9)
    eps = counit_system(g, 3)
    adj_eps = adjoint_system(eps)
    for n in range(4):
        assert adj_eps.vector(n) == eps.vector(n)
    nu = from_top(g, L1Vector.delta(2, (1, 0)))
    adj = adjoint_system(nu)
    assert adj.graph.beta == +1
    assert adj.vector(2)[(0, -1)] == 1
    assert check_harmonic(adj).ok
    # involution up to graph relabeling
    back = adjoint_system(adj)
    assert back.graph == nu.graph
    for n in range(3):
        assert back.vector(n) == nu.vector(n)
    with pytest.raises(GraphMismatch):
        adjoint_system(counit_system(young_graph(), 2))


def test_ergodic_estimate():
    g = classical_gt_graph()
    out = ergodic_estimate(g, (1, 0, 0), 1)
    assert out[(1,)] == Fraction(1, 3) and out[(0,)] == Fraction(2, 3)
    assert ergodic_estimate(g, (2, 1, 0), 3) == L1Vector.delta(3, (2, 1, 0))
    assert ergodic_estimate(g, (0, 0, 0), 2) == L1Vector.delta(2, (0, 0))
    yg = young_graph()
    assert ergodic_estimate(yg, (2, 1), 2).mass() == 1


def test_convex_mix_stays_harmonic():
    g = gtq_graph(-1, Q9)
    nu1 = from_top(g, L1Vector.delta(2, (2, 0)))
    nu2 = from_top(g, L1Vector.delta(2, (1, -1)))
    for t in (Fraction(0), Fraction(1, 3), Fraction(1), Fraction(2, 5)):
        assert check_harmonic(convex_mix(nu1, nu2, t)).ok
    with pytest.raises(NotProbability):
        convex_mix(nu1, nu2, Fraction(3, 2))


def test_harmonicity_is_phi_fixed_family():
    g = gtq_graph(-1, Q9)
    nu = from_top(g, L1Vector.delta(3, (2, 0, -1)))
    for n in range(3):
        assert phi_pushdown(g, nu.vector(n + 1)) == nu.vector(n)
        assert nu.vector(n) == pushdown_chain(g, nu.vector(3), n)


def test_kms_shadow_view():
    g = gtq_graph(-1, Q9)
    nu = from_top(g, L1Vector.delta(2, (1, 0)))
    shadow = KMSStateShadow(nu)
    assert shadow(2, (1, 0)) == 1
    assert shadow(1, (1,)) == nu.vector(1)[(1,)]
    assert shadow(0, ()) == 1


def test_json_round_trip():
    for g in (gtq_graph(-1, Q9), gtq_graph(-1), classical_gt_graph(), young_graph()):
        if g.kind == "young":
            nu = counit_system(g, 3)
        elif g.symbolic:
            nu = from_top(g, L1Vector.delta(2, (1, 0)))
        else:
            nu = from_top(g, L1Vector.delta(2, (2, 0)))
        data = system_to_json(nu)
        back = system_from_json(data)
        assert back.graph == nu.graph
        for n in range(nu.top_level + 1):
            vec, bvec = nu.vector(n), back.vector(n)
            assert set(vec.support()) == set(bvec.support())
            for v in vec.support():
                assert scalars_equal(vec[v], bvec[v])


def test_level_out_of_range():
    nu = counit_system(gtq_graph(-1, Q9), 2)
    with pytest.raises(LevelMismatch):
        nu.vector(3)
