import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import C2, C3, C4, crossed_catalogue, s3
from xmodcoh.bar import bar_differential, bar_space, is_cpt
from xmodcoh.crossed import (
    CrossedModule,
    Cpt3Cocycle,
    canonical_section_system,
    homotopy,
    lifting_z2,
    postnikov,
    section_system,
    validate_crossed_module,
    z2,
    z3,
)
from xmodcoh.groups import AxiomError, cyclic_group

CATALOGUE = crossed_catalogue()
NAMES = sorted(CATALOGUE)


def all_section_systems(V):
    hd = homotopy(V)
    fibres0 = [[g for g in range(V.group.order) if hd.proj[g] == p] for p in range(hd.pi0.order)]
    fibres0[0] = [0]
    image = hd.image_mu
    fibres1 = [[m for m in range(V.module.order) if V.mu[m] == g] if g else [0] for g in image]
    for s0 in itertools.product(*fibres0):
        for s1 in itertools.product(*fibres1):
            yield section_system(V, s0, dict(zip(image, s1)), hd)


class TestValidation:
    def test_c4_example(self):
        V = CATALOGUE["c4_example"]
        assert V.mu == (0, 2, 0, 2)
        assert [V.act(1, m) for m in range(4)] == [0, 3, 2, 1]

    def test_trivial_mu(self):
        validate_crossed_module(CrossedModule(C2, C2, [0, 0], [[0, 1], [0, 1]]))

    def test_mu_not_a_homomorphism(self):
        V = CrossedModule(C4, C4, [0, 1, 3, 3], [list(range(4))] * 4)
        with pytest.raises(AxiomError) as e:
            validate_crossed_module(V)
        assert e.value.axiom == "not a homomorphism"

    def test_equivariance_violation(self):
        S3, elems = s3()
        rot = elems.index((1, 2, 0))
        V = CrossedModule(S3, C3, [0, rot, S3.mul(rot, rot)], [[0, 1, 2]] * 6)
        with pytest.raises(AxiomError) as e:
            validate_crossed_module(V)
        assert e.value.axiom == "Equi"
        g, m = e.value.witness
        assert V.mu[V.act(g, m)] != S3.conj(g, V.mu[m])

    def test_peiffer_violation(self):
        S3, _ = s3()
        trivial = cyclic_group(1)
        V = CrossedModule(trivial, S3, [0] * 6, [list(range(6))])
        with pytest.raises(AxiomError) as e:
            validate_crossed_module(V)
        assert e.value.axiom == "Peif"
        n, m = e.value.witness
        assert S3.conj(n, m) != m

    def test_action_not_by_automorphisms(self):
        V = CrossedModule(C2, C4, [0, 0, 0, 0], [[0, 1, 2, 3], [0, 2, 1, 3]])
        with pytest.raises(AxiomError) as e:
            validate_crossed_module(V)
        assert e.value.axiom == "action not by automorphisms"

    def test_action_shape(self):
        with pytest.raises(AxiomError):
            validate_crossed_module(CrossedModule(C2, C2, [0, 0], [[0, 1]]))


class TestHomotopy:
    def test_c4_example(self):
        hd = homotopy(CATALOGUE["c4_example"])
        assert hd.pi0.order == 2 and hd.pi1.factors == (2,)
        assert hd.kernel_mu == [0, 2] and hd.decode((1,)) == 2
        # x . y = y: inversion fixes b^2
        assert hd.pi1_module.act(1, (1,)) == (1,)

    def test_trivial_mu(self):
        hd = homotopy(CATALOGUE["trivial_mu_c2"])
        assert hd.pi0.order == 2 and hd.pi1.factors == (2,)

    def test_identity(self):
        hd = homotopy(CATALOGUE["identity_c2"])
        assert hd.pi0.order == 1 and hd.pi1.is_trivial()

    @pytest.mark.parametrize("name", NAMES)
    def test_orders_multiply(self, name):
        V = CATALOGUE[name]
        hd = homotopy(V)
        # |pi_1| |G| = |pi_0| |M|  (exactness of 1 -> pi1 -> M -> G -> pi0 -> 1)
        assert hd.pi1.order * V.group.order == hd.pi0.order * V.module.order
        for k in hd.kernel_mu:
            assert hd.decode(hd.encode(k)) == k

    @pytest.mark.parametrize("name", NAMES)
    def test_encode_is_additive(self, name):
        V = CATALOGUE[name]
        hd = homotopy(V)
        for a in hd.kernel_mu:
            for b in hd.kernel_mu:
                assert hd.encode(V.module.mul(a, b)) == hd.pi1.add(hd.encode(a), hd.encode(b))


class TestSections:
    def test_c4_canonical(self):
        S = canonical_section_system(CATALOGUE["c4_example"])
        assert S.s0 == (0, 1) and S.s1 == {0: 0, 2: 1}

    def test_identity_mu(self):
        S = canonical_section_system(CATALOGUE["identity_c2"])
        assert S.s1 == {0: 0, 1: 1}

    def test_trivial_mu(self):
        S = canonical_section_system(CATALOGUE["trivial_mu_c2"])
        assert S.s0 == (0, 1) and S.s1 == {0: 0}

    def test_invalid_section(self):
        V = CATALOGUE["c4_example"]
        with pytest.raises(AxiomError):
            section_system(V, (0, 2), {0: 0, 2: 1})
        with pytest.raises(AxiomError):
            section_system(V, (0, 1), {0: 0, 2: 2})
        with pytest.raises(AxiomError):
            section_system(V, (1, 1), {0: 0, 2: 1})

    def test_z2_c4(self):
        V = CATALOGUE["c4_example"]
        t = z2(V, canonical_section_system(V))
        assert t[1][1] == 2
        assert all(t[0][p] == 0 and t[p][0] == 0 for p in range(2))

    def test_z2_trivial_mu(self):
        V = CATALOGUE["trivial_mu_c2"]
        assert z2(V, canonical_section_system(V)) == [[0, 0], [0, 0]]

    @pytest.mark.parametrize("name", NAMES)
    def test_non_abelian_cocycle_condition(self, name):
        V = CATALOGUE[name]
        G = V.group
        for S in all_section_systems(V):
            P = S.hd.pi0
            t = z2(V, S)
            for r, q, p in itertools.product(range(P.order), repeat=3):
                lhs = G.mul(t[r][q], t[P.mul(r, q)][p])
                rhs = G.mul(G.conj(S.s0[r], t[q][p]), t[r][P.mul(q, p)])
                assert lhs == rhs
                assert t[r][q] in S.hd.image_mu
            Z = lifting_z2(V, S)
            assert all(V.mu[Z[q][p]] == t[q][p] for q in range(P.order) for p in range(P.order))


class TestThreeCocycle:
    def test_c4_value(self):
        V = CATALOGUE["c4_example"]
        c = z3(V, canonical_section_system(V))
        assert c(1, 1, 1) == (1,)
        assert c.nonzero_values() == [((1, 1, 1), (1,))]
        # b (a . b^-1) = b b = b^2 = y
        M = V.module
        assert M.mul(1, V.act(1, M.inv(1))) == 2

    def test_trivial_mu_vanishes(self):
        V = CATALOGUE["trivial_mu_c2"]
        assert z3(V, canonical_section_system(V)).nonzero_values() == []

    @pytest.mark.parametrize("name", NAMES)
    def test_cpt_cocycle(self, name):
        V = CATALOGUE[name]
        for S in all_section_systems(V):
            c = z3(V, S)
            assert is_cpt(c.space, c.vec)
            assert not any(bar_differential(c.group, c.module, 3)(c.vec))

    @pytest.mark.parametrize("name", NAMES)
    def test_choice_independence(self, name):
        V = CATALOGUE[name]
        systems = list(all_section_systems(V))
        k = postnikov(V)
        for S in systems:
            assert k.class_eq(z3(V, S))

    def test_rejects_non_cocycle(self):
        hd = homotopy(CATALOGUE["trivial_mu_c2"])
        sp = bar_space(hd.pi0, hd.pi1_module, 3)
        with pytest.raises(AxiomError, match="componentwise"):
            Cpt3Cocycle(hd.pi1_module, sp.from_function(lambda r, q, p: (1,) if r == 0 else (0,)))

    def test_section_choices_counted(self):
        assert len(list(all_section_systems(CATALOGUE["c4_example"]))) == 4


class TestPostnikov:
    def test_c4_nontrivial(self):
        assert not postnikov(CATALOGUE["c4_example"]).is_trivial()

    def test_trivial_mu(self):
        assert postnikov(CATALOGUE["trivial_mu_c2"]).is_trivial()

    @pytest.mark.parametrize("name", NAMES)
    def test_reflexive(self, name):
        k = postnikov(CATALOGUE[name])
        assert k.class_eq(k.representative)

    @given(st.sampled_from(NAMES), st.data())
    def test_coboundary_shift_is_same_class(self, name, data):
        V = CATALOGUE[name]
        k = postnikov(V)
        rep = k.representative
        P, A = rep.group, rep.module
        fs = A.coeffs.factors
        vals = st.tuples(*(st.integers(0, d - 1) if d else st.integers(-5, 5) for d in fs))
        sp2 = bar_space(P, A, 2)
        c = sp2.from_function(lambda q, p: A.coeffs.zero() if 0 in (q, p) else data.draw(vals))
        shifted = Cpt3Cocycle(A, rep.space.add(rep.vec, bar_differential(P, A, 2)(c)))
        assert k.class_eq(shifted)
