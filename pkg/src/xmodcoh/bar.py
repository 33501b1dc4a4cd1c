"""Ordinary group cohomology through the bar complex, degrees 0 to 3.

Cochains of degree ``n`` are tables on tuples ``(g_{n-1}, ..., g_0)``.  The
differential is

    (dc)(g_n, ..., g_0) = c(g_n, ..., g_1)
                          + sum_{k=1}^{n} (-1)^k c(..., g_k g_{k-1}, ...)
                          + (-1)^{n+1} g_n . c(g_{n-1}, ..., g_0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbHom, DiagonalGroup, FPAbelianGroup, Subgroup, Subquotient, kernel_on_subgroup, solve
from .cochains import CochainSpace, Cohomology, build_differential
from .groups import AxiomError
from .modules import GModule

MAX_DEGREE = 3


def bar_space(G, M, n):
    if M.group.order != G.order:
        raise ValueError("coefficient module acts through a different group")
    return CochainSpace((G.order,) * n, M)


def bar_differential(G, M, n):
    """The differential ``C^n(G, M) -> C^{n+1}(G, M)`` as an :class:`AbHom`."""
    if not 0 <= n <= MAX_DEGREE:
        raise ValueError(f"bar differential available for 0 <= n <= {MAX_DEGREE}")
    src = bar_space(G, M, n)
    tgt = bar_space(G, M, n + 1)
    tab = G.table

    def terms(*args):
        yield 1, 0, args[:-1]
        for k in range(1, n + 1):
            i = n - k
            sign = -1 if k % 2 else 1
            yield sign, 0, args[:i] + (tab[args[i]][args[i + 1]],) + args[i + 2 :]
        yield (-1 if n % 2 == 0 else 1), args[0], args[1:]

    return build_differential(src, tgt, terms)


def group_cohomology(G, M, n):
    """``(Z^n, B^n, H^n)`` of ``G`` with coefficients in ``M`` as a :class:`Cohomology`."""
    if not 0 <= n <= MAX_DEGREE:
        raise ValueError(f"cohomology available for 0 <= n <= {MAX_DEGREE}")
    d_out = bar_differential(G, M, n)
    d_in = bar_differential(G, M, n - 1) if n > 0 else None
    return Cohomology(bar_space(G, M, n), d_out, d_in, n)


def is_cpt(space, vec):
    """Componentwise pointed: zero whenever some argument is the identity."""
    for args in space.tuples():
        if 0 in args and not space.coeffs.is_zero(space.value(vec, *args)):
            return False
    return True


def is_pointed(space, vec):
    return space.coeffs.is_zero(space.value(vec, *((0,) * len(space.shape))))


@dataclass
class CptSubgroup:
    subgroup: Subgroup
    group: FPAbelianGroup
    embedding: AbHom
    subquotient: Subquotient


def cpt_subgroup(G, M, n):
    space = bar_space(G, M, n)
    sub = space.unit_subgroup(lambda args: 0 not in args)
    sq = Subquotient(sub, Subgroup.trivial(space.group))
    gens = sq.generators()
    emb = AbHom(sq.group, space.group, [[g[i] for g in gens] for i in range(space.group.ngens)])
    return CptSubgroup(sub, sq.group, emb, sq)


def b3cpt_membership(G, M, t):
    """Some 2-cochain ``c`` with ``dc = t`` for a cpt 3-cochain ``t``, else ``None``."""
    space = bar_space(G, M, 3)
    if not is_cpt(space, t):
        raise ValueError("the 3-cochain is not componentwise pointed")
    d2 = bar_differential(G, M, 2)
    return solve(d2, d2.target, space.reduce(t))


class EquivariantHoms:
    """``Hom_P(A, M)`` for two modules over the same group ``P``.

    A homomorphism is a matrix ``X`` with ``X[j][i]`` the ``j``-th coordinate of
    the image of the ``i``-th generator of ``A``.
    """

    def __init__(self, A: GModule, M: GModule):
        if A.group.order != M.group.order or A.group.table != M.group.table:
            raise ValueError("modules over different groups")
        self.source = A
        self.target = M
        ra, rm = A.coeffs.ngens, M.coeffs.ngens
        self.ra, self.rm = ra, rm
        mf = M.coeffs.factors
        self.ambient = DiagonalGroup(mf * ra)
        rows = []
        tfactors = []
        # order of each generator must be killed
        for i, e in enumerate(A.coeffs.factors):
            if e:
                for j in range(rm):
                    rows.append({i * rm + j: e})
                    tfactors.append(mf[j])
        for p in range(A.group.order):
            if p == 0:
                continue
            pa, pm = A.action[p], M.action[p]
            for i in range(ra):
                for j in range(rm):
                    r = {}
                    for k in range(ra):
                        if pa[k][i]:
                            r[k * rm + j] = r.get(k * rm + j, 0) + pa[k][i]
                    for j2 in range(rm):
                        if pm[j][j2]:
                            r[i * rm + j2] = r.get(i * rm + j2, 0) - pm[j][j2]
                    rows.append(r)
                    tfactors.append(mf[j])
        tgt = DiagonalGroup(tfactors)
        self.constraints = AbHom(self.ambient, tgt, rows)
        self.subgroup = kernel_on_subgroup(self.constraints, tgt, Subgroup.full(self.ambient))
        self.subquotient = Subquotient(self.subgroup, Subgroup.trivial(self.ambient))
        self.group = self.subquotient.group

    def decode(self, coords):
        v = self.subquotient.lift(coords)
        return self.to_matrix(v)

    def to_matrix(self, v):
        rm, ra = self.rm, self.ra
        return [[v[i * rm + j] for i in range(ra)] for j in range(rm)]

    def from_matrix(self, X):
        rm, ra = self.rm, self.ra
        return self.ambient.reduce(X[j][i] for i in range(ra) for j in range(rm))

    def encode(self, X):
        return self.subquotient.encode(self.from_matrix(X))

    def apply(self, X, k):
        return self.target.coeffs.reduce(sum(X[j][i] * k[i] for i in range(self.ra)) for j in range(self.rm))

    def generators(self):
        return [self.to_matrix(v) for v in self.subquotient.generators()]


def equivariant_hom_group(A, M):
    return EquivariantHoms(A, M)


def bar_coboundary(G, M, n, c):
    """``dc`` for an ``n``-cochain, evaluated directly from the formula."""
    d = bar_differential(G, M, n)
    return d(c)


__all__ = [
    "AxiomError",
    "bar_space",
    "bar_differential",
    "group_cohomology",
    "is_cpt",
    "is_pointed",
    "cpt_subgroup",
    "b3cpt_membership",
    "EquivariantHoms",
    "equivariant_hom_group",
]
