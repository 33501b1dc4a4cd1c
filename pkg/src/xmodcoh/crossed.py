"""Crossed modules over finite groups, their homotopy groups and Postnikov invariant.

A crossed module is a homomorphism ``mu: M -> G`` together with a left action
``g . m`` of ``G`` on ``M`` by automorphisms such that

* ``mu(g . m) = g mu(m) g^-1``          (equivariance)
* ``mu(n) . m = n m n^-1``              (Peiffer identity)

``pi_0 = G / im mu`` and ``pi_1 = ker mu`` (abelian, central in ``M``) with the
induced ``pi_0``-action.  A section system ``(s1, s0)`` consists of a pointed
section ``s0`` of ``G -> pi_0`` and a pointed section ``s1`` of ``M -> im mu``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bar import b3cpt_membership, bar_differential, bar_space, is_cpt
from .groups import AbelianPresentation, AxiomError, FiniteGroup, GroupHom, Quotient
from .modules import GModule


class CrossedModule:
    def __init__(self, group, module, mu, action, name=None):
        self.group: FiniteGroup = group
        self.module: FiniteGroup = module
        self.mu = tuple(int(x) for x in mu)
        self.action = tuple(tuple(int(x) for x in row) for row in action)
        self.name = name

    def act(self, g, m):
        return self.action[g][m]

    def __repr__(self):
        return f"CrossedModule(|G|={self.group.order}, |M|={self.module.order})"


def validate_crossed_module(V):
    G, M = V.group, V.module
    if len(V.action) != G.order or any(len(row) != M.order for row in V.action):
        raise AxiomError("shape", None, "action table must be |G| x |M|")
    GroupHom(M, G, V.mu)
    for g in range(G.order):
        row = V.action[g]
        if sorted(row) != list(range(M.order)):
            raise AxiomError("action not by automorphisms", (g,), "not a bijection")
        GroupHom(M, M, row, check=False)
        w = GroupHom(M, M, row, check=False).failure()
        if w is not None:
            raise AxiomError("action not by automorphisms", (g,) + w)
    for m in range(M.order):
        if V.action[0][m] != m:
            raise AxiomError("action not by automorphisms", (0, m), "identity acts nontrivially")
    for g in range(G.order):
        for h in range(G.order):
            gh = G.table[g][h]
            for m in range(M.order):
                if V.action[gh][m] != V.action[g][V.action[h][m]]:
                    raise AxiomError("action not by automorphisms", (g, h, m), "not compatible with products")
    for g in range(G.order):
        for m in range(M.order):
            if V.mu[V.action[g][m]] != G.conj(g, V.mu[m]):
                raise AxiomError("Equi", (g, m))
    for n in range(M.order):
        for m in range(M.order):
            if V.action[V.mu[n]][m] != M.conj(n, m):
                raise AxiomError("Peif", (n, m))
    return V


@dataclass
class HomotopyData:
    pi0: FiniteGroup
    proj: list
    pi0_reps: list
    image_mu: list
    kernel_mu: list
    pi1_pres: AbelianPresentation
    pi1_module: GModule

    @property
    def pi1(self):
        return self.pi1_pres.group

    def encode(self, m):
        """``pi_1`` coordinates of an element of ``ker mu``."""
        return self.pi1_pres.encode(m)

    def decode(self, coords):
        return self.pi1_pres.decode(coords)


def homotopy(V):
    G, M = V.group, V.module
    image = sorted(set(V.mu))
    kernel = [m for m in range(M.order) if V.mu[m] == 0]
    for k in kernel:
        for m in range(M.order):
            if M.table[k][m] != M.table[m][k]:
                raise AxiomError("internal inconsistency", (k, m), "ker mu is not central")
    q = Quotient(G, image)
    pres = AbelianPresentation(M, kernel)
    r = pres.group.ngens
    action = []
    for p in range(q.group.order):
        lifts = q.coset(p)
        cols = []
        for i in range(r):
            k = pres.decode([int(i == j) for j in range(r)])
            imgs = {V.action[g][k] for g in lifts}
            if len(imgs) != 1:
                raise AxiomError("internal inconsistency", (p, k), "induced action depends on the lift")
            cols.append(pres.encode(imgs.pop()))
        action.append([[c[j] for c in cols] for j in range(r)])
    pi1_module = GModule(q.group, pres.group, action, "pi1")
    return HomotopyData(q.group, q.proj, q.reps, image, kernel, pres, pi1_module)


@dataclass
class SectionSystem:
    """``s0: pi_0 -> G`` and ``s1: im mu -> M`` (a dict keyed by ``G`` indices)."""

    s0: tuple
    s1: dict
    hd: HomotopyData = field(repr=False, default=None)

    def __post_init__(self):
        self.s0 = tuple(self.s0)
        self.s1 = {int(k): int(v) for k, v in self.s1.items()}


def section_system(V, s0, s1, hd=None):
    hd = hd or homotopy(V)
    s = SectionSystem(s0, s1, hd)
    if len(s.s0) != hd.pi0.order or s.s0[0] != 0:
        raise AxiomError("section system", None, "s0 must be pointed and defined on pi_0")
    for p, g in enumerate(s.s0):
        if hd.proj[g] != p:
            raise AxiomError("section system", (p, g), "s0 is not a section")
    if sorted(s.s1) != hd.image_mu or s.s1.get(0) != 0:
        raise AxiomError("section system", None, "s1 must be pointed and defined on im mu")
    for g, m in s.s1.items():
        if V.mu[m] != g:
            raise AxiomError("section system", (g, m), "s1 is not a section of mu")
    return s


def canonical_section_system(V, hd=None):
    """Minimal-index preimages in each fibre."""
    hd = hd or homotopy(V)
    s1 = {}
    for m in range(V.module.order):
        s1.setdefault(V.mu[m], m)
    return SectionSystem(tuple(hd.pi0_reps), s1, hd)


def z2(V, S):
    """Non-abelian 2-cocycle ``(q, p) -> s0(q) s0(p) s0(qp)^-1`` in ``im mu``."""
    G = V.group
    P = S.hd.pi0
    s0 = S.s0
    return [[G.prod(s0[q], s0[p], G.inv(s0[P.table[q][p]])) for p in range(P.order)] for q in range(P.order)]


def lifting_z2(V, S):
    """``Z^2 = s1 o z^2`` with values in ``M``."""
    t = z2(V, S)
    return [[S.s1[x] for x in row] for row in t]


class Cpt3Cocycle:
    """A componentwise pointed 3-cocycle of ``pi_0`` with values in a module."""

    def __init__(self, pi1_module, vec, check=True):
        self.module = pi1_module
        self.group = pi1_module.group
        self.space = bar_space(self.group, pi1_module, 3)
        self.vec = self.space.reduce(vec)
        if check:
            if not is_cpt(self.space, self.vec):
                raise AxiomError("not componentwise pointed", None)
            d = bar_differential(self.group, pi1_module, 3)
            if not d.target.is_zero(d(self.vec)):
                raise AxiomError("not a 3-cocycle", None)

    def __call__(self, r, q, p):
        return self.space.value(self.vec, r, q, p)

    def nonzero_values(self):
        out = []
        for args in self.space.tuples():
            v = self.space.value(self.vec, *args)
            if any(v):
                out.append((args, v))
        return out

    def __eq__(self, other):
        return isinstance(other, Cpt3Cocycle) and self.vec == other.vec

    def __hash__(self):
        return hash(self.vec)


def z3(V, S):
    """The 3-cocycle of the extension ``pi_1 -> M -> G -> pi_0``:

    ``z3(r, q, p) = Z(r,q) Z(rq,p) Z(r,qp)^-1 (s0(r) . Z(q,p))^-1`` read in ``pi_1``.
    """
    M = V.module
    hd = S.hd
    P = hd.pi0
    Z = lifting_z2(V, S)
    s0 = S.s0

    def value(r, q, p):
        rq = P.table[r][q]
        qp = P.table[q][p]
        x = M.prod(Z[r][q], Z[rq][p], M.inv(Z[r][qp]), M.inv(V.act(s0[r], Z[q][p])))
        if V.mu[x] != 0:
            raise AxiomError("internal inconsistency", (r, q, p), "value outside ker mu")
        return hd.encode(x)

    space = bar_space(P, hd.pi1_module, 3)
    return Cpt3Cocycle(hd.pi1_module, space.from_function(value))


class PostnikovInvariant:
    def __init__(self, representative, section_system):
        self.representative = representative
        self.section_system = section_system

    def class_eq(self, other):
        """Whether ``other`` is cohomologous to the representative."""
        rep = self.representative
        diff = rep.space.sub(rep.vec, other.vec)
        return b3cpt_membership(rep.group, rep.module, diff) is not None

    def is_trivial(self):
        rep = self.representative
        return self.class_eq(Cpt3Cocycle(rep.module, rep.space.zero(), check=False))


def postnikov(V, S=None):
    S = S or canonical_section_system(V)
    return PostnikovInvariant(z3(V, S), S)


def crossed_module_from_tables(G, M, mu, action, name=None):
    return validate_crossed_module(CrossedModule(G, M, mu, action, name))
