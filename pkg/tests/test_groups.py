from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import s3
from oracles import brute_is_group, invariants_from_orders
from xmodcoh.abelian import FPAbelianGroup
from xmodcoh.groups import (
    AbelianPresentation,
    AxiomError,
    GroupHom,
    Quotient,
    cyclic_group,
    direct_product,
    generated_subgroup,
    is_normal,
    minimal_generators,
    subgroup,
    validate_group,
)
from xmodcoh.modules import GModule, module_from_generators, trivial_module, validate_gmodule

LOOP5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


class TestValidateGroup:
    def test_c2(self):
        G = validate_group([[0, 1], [1, 0]])
        assert G.order == 2 and G.inverses == (0, 1)

    def test_c4_inverses(self):
        G = validate_group(cyclic_table(4))
        assert G.inverses == (0, 3, 2, 1)

    def test_non_associative_witness(self):
        with pytest.raises(AxiomError) as e:
            validate_group(LOOP5)
        assert e.value.axiom == "non-associative"
        a, b, c = e.value.witness
        t = LOOP5
        assert t[t[a][b]][c] != t[a][t[b][c]]
        assert not brute_is_group(LOOP5)

    def test_bad_identity(self):
        with pytest.raises(AxiomError) as e:
            validate_group([[1, 0], [0, 1]])
        assert e.value.axiom == "missing identity"

    def test_missing_inverse(self):
        with pytest.raises(AxiomError) as e:
            validate_group([[0, 1, 2], [1, 1, 1], [2, 1, 0]])
        assert e.value.axiom == "missing inverse"

    def test_shape(self):
        with pytest.raises(AxiomError, match="shape"):
            validate_group([[0, 1], [1]])
        with pytest.raises(AxiomError, match="shape"):
            validate_group([[0, 2], [1, 0]])

    @given(st.integers(1, 12))
    def test_cyclic(self, n):
        G = validate_group(cyclic_table(n))
        assert G == cyclic_group(n)
        assert all(G.mul(a, G.inv(a)) == 0 for a in G.elements())

    @given(st.integers(1, 4), st.integers(1, 4))
    def test_direct_products_are_groups(self, m, n):
        P = direct_product(cyclic_group(m), cyclic_group(n))
        assert brute_is_group(P.table)


class TestGroupHom:
    def test_valid(self):
        f = GroupHom(cyclic_group(4), cyclic_group(2), [0, 1, 0, 1])
        assert f.kernel() == [0, 2] and f.image() == [0, 1]

    def test_not_a_hom(self):
        with pytest.raises(AxiomError) as e:
            GroupHom(cyclic_group(4), cyclic_group(4), [0, 1, 1, 3])
        assert e.value.axiom == "not a homomorphism"

    def test_shape(self):
        with pytest.raises(AxiomError):
            GroupHom(cyclic_group(2), cyclic_group(2), [0])
        with pytest.raises(AxiomError):
            GroupHom(cyclic_group(2), cyclic_group(2), [0, 5])

    @given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 7))
    def test_hom_iff_brute(self, m, n, k):
        image = [(k * x) % n for x in range(m)]
        brute = all(image[(a + b) % m] == (image[a] + image[b]) % n for a in range(m) for b in range(m))
        assert (GroupHom(cyclic_group(m), cyclic_group(n), image, check=False).failure() is None) == brute


class TestSubgroupsAndQuotients:
    def test_s3(self):
        S3, elems = s3()
        assert S3.order == 6 and not S3.is_abelian()
        rot = [i for i, p in enumerate(elems) if p == (1, 2, 0)][0]
        A3 = generated_subgroup(S3, [rot])
        assert len(A3) == 3 and is_normal(S3, A3)
        q = Quotient(S3, A3)
        assert q.group.order == 2 and brute_is_group(q.group.table)
        flip = [i for i, p in enumerate(elems) if p == (1, 0, 2)][0]
        assert not is_normal(S3, [0, flip])
        with pytest.raises(AxiomError):
            Quotient(S3, [0, flip])

    def test_subgroup_table(self):
        G = cyclic_group(6)
        H, emb = subgroup(G, [0, 2, 4])
        assert H.order == 3 and emb == [0, 2, 4]
        with pytest.raises(AxiomError):
            subgroup(G, [0, 1])

    def test_minimal_generators(self):
        G = direct_product(cyclic_group(2), cyclic_group(2))
        gens = minimal_generators(G)
        assert len(gens) == 2 and len(generated_subgroup(G, gens)) == 4

    @given(st.integers(1, 12), st.data())
    def test_quotient_cosets(self, n, data):
        d = data.draw(st.sampled_from([k for k in range(1, n + 1) if n % k == 0]))
        G = cyclic_group(n)
        N = generated_subgroup(G, [d % n])
        q = Quotient(G, N)
        assert q.group.order * len(N) == n
        for x in range(n):
            assert x in q.coset(q.proj[x])
        assert q.reps == sorted(q.reps) and q.reps[0] == 0


class TestAbelianPresentation:
    @given(st.lists(st.integers(2, 6), min_size=1, max_size=3))
    def test_invariants_and_roundtrip(self, orders):
        G = cyclic_group(orders[0])
        for k in orders[1:]:
            G = direct_product(G, cyclic_group(k))
        pres = AbelianPresentation(G, range(G.order))
        assert list(pres.group.factors) == invariants_from_orders(G.element_order(x) for x in range(G.order))
        for x in range(G.order):
            assert pres.decode(pres.encode(x)) == x
        for a in range(G.order):
            for b in range(G.order):
                assert pres.encode(G.mul(a, b)) == pres.group.add(pres.encode(a), pres.encode(b))

    def test_non_abelian_rejected(self):
        S3, _ = s3()
        with pytest.raises(AxiomError, match="non-abelian"):
            AbelianPresentation(S3, range(6))


C2 = cyclic_group(2)
Z4 = FPAbelianGroup([4])


class TestModules:
    def test_trivial_action(self):
        M = validate_gmodule(trivial_module(C2, [4]))
        assert M.is_trivial_action and M.act(1, (3,)) == (3,)

    def test_negation(self):
        M = validate_gmodule(GModule(C2, Z4, [[[1]], [[-1]]]))
        assert M.act(1, (1,)) == (3,)
        assert M.act(1, M.act(1, (1,))) == (1,)

    def test_doubling_is_not_an_automorphism(self):
        with pytest.raises(AxiomError) as e:
            validate_gmodule(GModule(C2, Z4, [[[1]], [[2]]]))
        assert e.value.axiom == "not an automorphism"

    def test_composition_mismatch(self):
        with pytest.raises(AxiomError) as e:
            validate_gmodule(GModule(cyclic_group(3), Z4, [[[1]], [[-1]], [[-1]]]))
        assert e.value.axiom == "composition mismatch"

    def test_generated_action(self):
        M = module_from_generators(cyclic_group(4), FPAbelianGroup([5]), {1: [[2]]})
        assert [M.act(g, (1,)) for g in range(4)] == [(1,), (2,), (4,), (3,)]

    def test_generated_action_inconsistent(self):
        with pytest.raises(AxiomError):
            module_from_generators(cyclic_group(3), Z4, {1: [[-1]]})

    def test_shape(self):
        with pytest.raises(AxiomError):
            GModule(C2, Z4, [[[1]]])
        with pytest.raises(AxiomError):
            GModule(C2, Z4, [[[1]], [[1, 0]]])

    @given(st.sampled_from([2, 3, 4, 5, 6, 8, 12]), st.integers(1, 11))
    def test_unit_actions_of_c2(self, n, u):
        """``x -> u x`` defines a C2-action on Z/n exactly when u is a unit with u^2 = 1."""
        ok = (u * u) % n == 1 % n and gcd(u, n) == 1
        M = GModule(C2, FPAbelianGroup([n]), [[[1]], [[u]]])
        if ok:
            validate_gmodule(M)
        else:
            with pytest.raises(AxiomError):
                validate_gmodule(M)
