"""Cohomology of a crossed module ``V`` with coefficients in a ``pi_0(V)``-module.

Cochain domains in degrees 0..3 are ``{1}``, ``G``, ``M x G x G`` and
``M x M x G x M x G x G`` (``M``, ``G`` the module and group parts).  With
``m h := mu(m) h`` and ``hbar`` the class of ``h`` in ``pi_0``:

    (dc)(g)                  = c() - gbar . c()
    (dc)(m, h, g)            = c(mh) - c(hg) + hbar . c(g)
    (dc)(p, n, k, m, h, g)   = c(p, nk, mh) - c(pn, k, hg) + c(n (k.m), kh, g)
                               - kbar . c(m, h, g)

Everything here works with explicit cochain vectors (see ``cochains``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .abelian import AbHom, DiagonalGroup, Subgroup, Subquotient, induced_hom, is_isomorphism, kernel_on_subgroup
from .bar import EquivariantHoms, bar_differential, bar_space, group_cohomology, is_cpt
from .cochains import CochainSpace, Cohomology, build_differential
from .crossed import (
    Cpt3Cocycle,
    SectionSystem,
    canonical_section_system,
    homotopy,
    lifting_z2,
    postnikov,
    z3,
)
from .groups import AxiomError


class PreconditionError(ValueError):
    pass


class CmComplex:
    """Cochain complex ``C(V, M)`` in degrees 0..3 with cached differentials."""

    def __init__(self, V, M, hd=None):
        self.V = V
        self.hd = hd or homotopy(V)
        if M.group.table != self.hd.pi0.table:
            raise PreconditionError("coefficients must be a module over pi_0 of the crossed module")
        self.M = M
        self._d = {}
        self._h = {}

    def space(self, n):
        g, m = self.V.group.order, self.V.module.order
        shapes = {0: (), 1: (g,), 2: (m, g, g), 3: (m, m, g, m, g, g)}
        return CochainSpace(shapes[n], self.M)

    def differential(self, n):
        if n not in self._d:
            self._d[n] = self._build(n)
        return self._d[n]

    def _build(self, n):
        if not 0 <= n <= 2:
            raise ValueError("crossed module differentials are available for 0 <= n <= 2")
        V = self.V
        G, Mv, mu = V.group.table, V.module.table, V.mu
        act = V.action
        if n == 0:

            def terms(g):
                yield 1, 0, ()
                yield -1, g, ()

        elif n == 1:

            def terms(m, h, g):
                yield 1, 0, (G[mu[m]][h],)
                yield -1, 0, (G[h][g],)
                yield 1, h, (g,)

        else:

            def terms(p, n_, k, m, h, g):
                yield 1, 0, (p, G[mu[n_]][k], G[mu[m]][h])
                yield -1, 0, (Mv[p][n_], k, G[h][g])
                yield 1, 0, (Mv[n_][act[k][m]], G[k][h], g)
                yield -1, k, (m, h, g)

        return build_differential(self.space(n), self.space(n + 1), terms, acting=self.hd.proj)

    def cohomology(self, n):
        if n not in self._h:
            d_in = self.differential(n - 1) if n > 0 else None
            self._h[n] = Cohomology(self.space(n), self.differential(n), d_in, n)
        return self._h[n]

    # -- 2-cochain helpers -------------------------------------------------

    def value(self, c, m, h, g):
        return self.space(2).value(c, m, h, g)

    def is_cocycle(self, c):
        return self.cohomology(2).is_cocycle(c)

    def is_pointed(self, c):
        return not any(self.value(c, 0, 0, 0))

    def pointed_subgroup(self):
        sp = self.space(2)
        return kernel_on_subgroup(sp.evaluation([(0, 0, 0)]), DiagonalGroup(sp.coeffs.factors), Subgroup.full(sp.group))

    @cached_property
    def z2_pointed(self):
        return self.cohomology(2).cocycle_subgroup.intersect(self.pointed_subgroup())

    @cached_property
    def b2_pointed(self):
        return self.cohomology(2).coboundary_subgroup.intersect(self.pointed_subgroup())

    @cached_property
    def h2_pointed(self):
        return Subquotient(self.z2_pointed, self.b2_pointed)


def cm_differential(V, M, n):
    return CmComplex(V, M).differential(n)


def cm_cohomology(V, M, n):
    return CmComplex(V, M).cohomology(n)


# ---------------------------------------------------------------------------
# Module and group parts


@dataclass
class PartsPair:
    module_part: tuple  # cochain on M
    group_part: tuple  # cochain on G x G
    module_space: CochainSpace
    group_space: CochainSpace


def parts(cx, c):
    """``c_M(m) = c(m, 1, 1)`` and ``c_G(h, g) = c(1, h, g)``."""
    V = cx.V
    ms = CochainSpace((V.module.order,), cx.M)
    gs = CochainSpace((V.group.order, V.group.order), cx.M)
    cm = ms.from_function(lambda m: cx.value(c, m, 0, 0))
    cg = gs.from_function(lambda h, g: cx.value(c, 0, h, g))
    return PartsPair(cm, cg, ms, gs)


def assemble(cx, pair):
    """``z(m, h, g) = z_M(m) - z_G(mu(m), h) + z_G(h, g)``."""
    V = cx.V
    co = cx.M.coeffs
    ms, gs = pair.module_space, pair.group_space

    def fn(m, h, g):
        a = ms.value(pair.module_part, m)
        b = gs.value(pair.group_part, V.mu[m], h)
        c = gs.value(pair.group_part, h, g)
        return co.add(co.sub(a, b), c)

    return cx.space(2).from_function(fn)


def make_pair(cx, module_fn, group_fn):
    V = cx.V
    ms = CochainSpace((V.module.order,), cx.M)
    gs = CochainSpace((V.group.order, V.group.order), cx.M)
    return PartsPair(ms.from_function(module_fn), gs.from_function(group_fn), ms, gs)


@dataclass
class Verdict:
    ok: bool
    condition: str | None = None
    witness: tuple | None = None

    def __bool__(self):
        return self.ok


def is_cocycle_by_parts(cx, pair):
    """Check the three conditions characterising parts of 2-cocycles.

    (ii) the group part is a 2-cocycle of ``G``; (iii) ``z_M(nm) = z_M(n) +
    z_M(m) - z_G(mu n, mu m)``; (iv) ``z_M(g.m) = gbar . z_M(m) + z_G(mu(g.m), g)
    - z_G(g, mu m)``.  The pair satisfies them exactly when it is the pair of
    parts of a 2-cocycle.
    """
    V = cx.V
    G, Mv = V.group, V.module
    co = cx.M.coeffs
    proj = cx.hd.proj
    ms, gs = pair.module_space, pair.group_space
    zm = lambda m: ms.value(pair.module_part, m)  # noqa: E731
    zg = lambda h, g: gs.value(pair.group_part, h, g)  # noqa: E731
    MG = cx.M.restrict(proj, G)
    d2 = bar_differential(G, MG, 2)
    dz = d2(pair.group_part)
    if any(dz):
        sp3 = bar_space(G, MG, 3)
        for args in sp3.tuples():
            if any(sp3.value(dz, *args)):
                return Verdict(False, "(ii) group part is not a 2-cocycle", args)
    for n in range(Mv.order):
        for m in range(Mv.order):
            lhs = zm(Mv.table[n][m])
            rhs = co.sub(co.add(zm(n), zm(m)), zg(V.mu[n], V.mu[m]))
            if lhs != rhs:
                return Verdict(False, "(iii) multiplicativity of the module part", (n, m))
    for g in range(G.order):
        for m in range(Mv.order):
            gm = V.action[g][m]
            lhs = zm(gm)
            rhs = co.sub(co.add(cx.M.act(proj[g], zm(m)), zg(V.mu[gm], g)), zg(g, V.mu[m]))
            if lhs != rhs:
                return Verdict(False, "(iv) compatibility with the action", (g, m))
    return Verdict(True)


# ---------------------------------------------------------------------------
# Pointisation


def pointiser(cx, z):
    """The constant 1-cochain with value ``z(1, 1, 1)``."""
    v = cx.value(z, 0, 0, 0)
    return cx.space(1).from_function(lambda g: v)


def pointisation(cx, z):
    if not cx.is_cocycle(z):
        raise PreconditionError("pointisation needs a 2-cocycle")
    dz = cx.differential(1)(pointiser(cx, z))
    return cx.space(2).sub(z, dz)


# ---------------------------------------------------------------------------
# Section systems, kappa and standardisation


class Sections:
    """Bracket notation for a section system: ``[p] = s0(p)``, ``[g] = s1(g)``."""

    def __init__(self, V, S):
        self.V = V
        self.S = S
        hd = S.hd
        self.hd = hd
        G = V.group
        self.Z2 = lifting_z2(V, S)
        # b(g) = g [gbar]^-1 in im mu
        self.b = [G.mul(g, G.inv(S.s0[hd.proj[g]])) for g in range(G.order)]

    def bracket_module(self, m):
        """``[m] = s1(mu(m))``."""
        return self.S.s1[self.V.mu[m]]


def kappa(V, S):
    """``kappa(h, g) = [h[hbar]^-1]^-1 h.([g[gbar]^-1]^-1) [hg[hgbar]^-1] [hbar, gbar]^-1``."""
    sec = Sections(V, S)
    G, M = V.group, V.module
    proj = S.hd.proj
    s1 = S.s1
    table = []
    for h in range(G.order):
        row = []
        for g in range(G.order):
            hg = G.mul(h, g)
            x = M.prod(
                M.inv(s1[sec.b[h]]),
                V.act(h, M.inv(s1[sec.b[g]])),
                s1[sec.b[hg]],
                M.inv(sec.Z2[proj[h]][proj[g]]),
            )
            if V.mu[x] != 0:
                raise AxiomError("internal inconsistency", (h, g), "kappa value outside ker mu")
            row.append(x)
        table.append(row)
    return table


def standardiser(cx, z, S):
    """``sigma(g) = z_M([g[gbar]^-1]) - z_G(g[gbar]^-1, [gbar])`` as a 1-cochain."""
    sec = Sections(cx.V, S)
    co = cx.M.coeffs
    proj = cx.hd.proj

    def fn(g):
        bg = sec.b[g]
        return co.sub(cx.value(z, S.s1[bg], 0, 0), cx.value(z, 0, bg, S.s0[proj[g]]))

    return cx.space(1).from_function(fn)


def standardise(cx, z, S):
    if not cx.is_cocycle(z):
        raise PreconditionError("standardisation needs a 2-cocycle")
    if not cx.is_pointed(z):
        raise PreconditionError("standardisation needs a pointed 2-cocycle")
    return cx.space(2).sub(z, cx.differential(1)(standardiser(cx, z, S)))


def standard_constraints(cx, S):
    """Evaluation at ``(1,1,1)``, ``([m],1,1)`` and ``(1, g[gbar]^-1, [gbar])``."""
    sec = Sections(cx.V, S)
    proj = cx.hd.proj
    pts = [(0, 0, 0)]
    pts += [(sec.bracket_module(m), 0, 0) for m in range(cx.V.module.order)]
    pts += [(0, sec.b[g], S.s0[proj[g]]) for g in range(cx.V.group.order)]
    return cx.space(2).evaluation(pts)


@dataclass
class StandardGroups:
    z_subgroup: Subgroup
    b_subgroup: Subgroup
    h: Subquotient
    z_group: object
    b_group: object
    pointed_h: Subquotient
    idempotent_agrees: bool

    @property
    def Z(self):
        return self.z_group

    @property
    def B(self):
        return self.b_group

    @property
    def H(self):
        return self.h.group


def st_groups(cx, S):
    """Standard 2-cocycles, coboundaries and cohomology for a section system.

    ``Z^2_st`` is computed as a kernel of linear constraints and cross-checked
    against the image of the standardisation idempotent on ``Z^2_pt``.
    """
    d2 = cx.differential(2)
    cons = standard_constraints(cx, S)
    tgt = DiagonalGroup(d2.target.factors + cons.target.factors)
    stacked = AbHom(d2.source, tgt, d2.rows + cons.rows)
    zst = kernel_on_subgroup(stacked, tgt, Subgroup.full(d2.source))
    bst = zst.intersect(cx.cohomology(2).coboundary_subgroup)
    zero = Subgroup.trivial(d2.source)
    zpt_gens = Subquotient(cx.z2_pointed, zero).generators()
    via_idem = Subgroup(d2.source, [standardise(cx, g, S) for g in zpt_gens])
    return StandardGroups(
        z_subgroup=zst,
        b_subgroup=bst,
        h=Subquotient(zst, bst),
        z_group=Subquotient(zst, zero).group,
        b_group=Subquotient(bst, zero).group,
        pointed_h=cx.h2_pointed,
        idempotent_agrees=(via_idem == zst),
    )


# ---------------------------------------------------------------------------
# Phi / Psi and the Eilenberg-Mac Lane group


@dataclass
class EmCocycle:
    z1: list  # matrix pi_1 -> M
    c0: tuple  # cpt 2-cochain of pi_0 with values in M


def phi(cx, z, S):
    """``(k -> z_M(k), (q, p) -> z_G([q], [p]))``."""
    hd = cx.hd
    r = hd.pi1.ngens
    cols = [cx.value(z, hd.decode([int(i == j) for j in range(r)]), 0, 0) for i in range(r)]
    X = [[c[j] for c in cols] for j in range(cx.M.coeffs.ngens)]
    sp = bar_space(hd.pi0, cx.M, 2)
    c0 = sp.from_function(lambda q, p: cx.value(z, 0, S.s0[q], S.s0[p]))
    return EmCocycle(X, c0)


def em_compatible(pi1_module, z3c, M, e):
    """``z1 o z3 == d c0`` exactly."""
    homs = EquivariantHoms(pi1_module, M)
    P = pi1_module.group
    d = bar_differential(P, M, 2)
    lhs = bar_space(P, M, 3).from_function(lambda r, q, p: homs.apply(e.z1, z3c(r, q, p)))
    return lhs == d(e.c0)


def psi(cx, e, S):
    """``z(m,h,g) = z1(m[m]^-1 kappa(mu m, h)^-1 kappa(h, g)) + c0(hbar, gbar)``."""
    V, hd = cx.V, cx.hd
    if not em_compatible(hd.pi1_module, z3(V, S), cx.M, e):
        raise PreconditionError("the pair does not satisfy the compatibility z1 o z3 = d c0")
    Mv = V.module
    kap = kappa(V, S)
    sec = Sections(V, S)
    co = cx.M.coeffs
    homs = EquivariantHoms(hd.pi1_module, cx.M)
    sp = bar_space(hd.pi0, cx.M, 2)
    proj = hd.proj

    def fn(m, h, g):
        k = Mv.prod(m, Mv.inv(sec.bracket_module(m)), Mv.inv(kap[V.mu[m]][h]), kap[h][g])
        if V.mu[k] != 0:
            raise AxiomError("internal inconsistency", (m, h, g), "argument of z1 outside ker mu")
        return co.add(homs.apply(e.z1, hd.encode(k)), sp.value(e.c0, proj[h], proj[g]))

    return cx.space(2).from_function(fn)


@dataclass
class EmGroups:
    z_subgroup: Subgroup
    b_subgroup: Subgroup
    h: Subquotient
    homs: EquivariantHoms
    c2_space: CochainSpace

    @property
    def Z(self):
        return Subquotient(self.z_subgroup, Subgroup.trivial(self.z_subgroup.ambient)).group

    @property
    def B(self):
        return Subquotient(self.b_subgroup, Subgroup.trivial(self.b_subgroup.ambient)).group

    @property
    def H(self):
        return self.h.group

    def split(self, v):
        """Ambient vector -> ``EmCocycle``."""
        na = self.homs.ambient.ngens
        return EmCocycle(self.homs.to_matrix(v[:na]), tuple(v[na:]))

    def join(self, e):
        return tuple(self.homs.from_matrix(e.z1)) + tuple(self.c2_space.reduce(e.c0))


def em_groups(pi1_module, z3c, M):
    """``Z^2_EM``, ``B^2_EM = {0} x B^2_cpt`` and their quotient for ``(pi_0, pi_1, z3)``."""
    P = pi1_module.group
    if M.group.table != P.table:
        raise PreconditionError("coefficients must be a module over pi_0")
    sp3 = bar_space(P, pi1_module, 3)
    if not is_cpt(sp3, z3c.vec):
        raise PreconditionError("z3 is not componentwise pointed")
    d3 = bar_differential(P, pi1_module, 3)
    if any(d3(z3c.vec)):
        raise PreconditionError("z3 is not a 3-cocycle")
    homs = EquivariantHoms(pi1_module, M)
    c2 = bar_space(P, M, 2)
    c3 = bar_space(P, M, 3)
    d2 = bar_differential(P, M, 2)
    na = homs.ambient.ngens
    amb = DiagonalGroup(homs.ambient.factors + c2.group.factors)
    rm, ra = homs.rm, homs.ra
    rows = []
    for t, args in enumerate(c3.tuples()):
        zv = z3c(*args)
        for j in range(rm):
            row = {}
            for i in range(ra):
                if zv[i]:
                    row[i * rm + j] = zv[i]
            for col, c in d2.rows[t * rm + j].items():
                row[na + col] = row.get(na + col, 0) - c
            rows.append(row)
    F = AbHom(amb, c3.group, rows)
    pad_h = [tuple(r) + (0,) * c2.group.ngens for r in homs.subgroup.rows]
    cpt = c2.unit_subgroup(lambda a: 0 not in a)
    pad_c = [(0,) * na + tuple(r) for r in cpt.rows]
    L = Subgroup(amb, pad_h + pad_c)
    zem = kernel_on_subgroup(F, c3.group, L)
    b2 = group_cohomology(P, M, 2).coboundary_subgroup.intersect(cpt)
    bem = Subgroup(amb, [(0,) * na + tuple(r) for r in b2.rows])
    return EmGroups(zem, bem, Subquotient(zem, bem), homs, c2)


@dataclass
class EmComparison:
    h2: object
    h2_em: object
    isomorphic: bool
    z3: Cpt3Cocycle


def em_h2(V, M, z3c=None):
    """``H^2(V, M)`` next to ``H^2_EM`` for a representative of the Postnikov invariant."""
    cx = CmComplex(V, M)
    if z3c is None:
        z3c = postnikov(V, canonical_section_system(V, cx.hd)).representative
    h2 = cx.cohomology(2).H
    hem = em_groups(cx.hd.pi1_module, z3c, M).H
    return EmComparison(h2, hem, h2.factors == hem.factors, z3c)


# ---------------------------------------------------------------------------
# Transport along extension equivalences


@dataclass
class TransportResult:
    map: AbHom
    bijective: bool
    coboundaries_iso: bool
    cohomology_iso: bool
    target_sections: SectionSystem


def compatible_sections(E, Et, phi_M, phi_G, S, hdt):
    """Section system of ``Et`` with ``st0 = phi_G o s0`` and ``phi_M o s1 = st1 o phi_G``."""
    st0 = tuple(phi_G[g] for g in S.s0)
    forced = {}
    for g, m in S.s1.items():
        gt, mt = phi_G[g], phi_M[m]
        if forced.setdefault(gt, mt) != mt:
            raise PreconditionError("no compatible section system exists")
    st1 = {}
    for mt in range(Et.module.order):
        gt = Et.mu[mt]
        if gt in forced:
            st1[gt] = forced[gt]
        else:
            st1.setdefault(gt, mt)
    return SectionSystem(st0, st1, hdt)


def transport_standard(E, Et, phi_M, phi_G, S, M):
    """Restriction of ``z -> z o (phi_M x phi_G x phi_G)`` to standard cocycle groups."""
    hd, hdt = S.hd or homotopy(E), homotopy(Et)
    phi_M, phi_G = list(phi_M), list(phi_G)
    for m in range(E.module.order):
        if Et.mu[phi_M[m]] != phi_G[E.mu[m]]:
            raise PreconditionError(f"not a morphism of crossed modules at module element {m}")
        for g in range(E.group.order):
            if phi_M[E.action[g][m]] != Et.action[phi_G[g]][phi_M[m]]:
                raise PreconditionError(f"not a morphism of crossed modules at ({g}, {m})")
    if hd.pi0.table != hdt.pi0.table or any(hdt.proj[phi_G[g]] != hd.proj[g] for g in range(E.group.order)):
        raise PreconditionError("not an extension equivalence: projections to pi_0 disagree")
    if hd.pi1.factors != hdt.pi1.factors or any(hdt.encode(phi_M[k]) != hd.encode(k) for k in hd.kernel_mu):
        raise PreconditionError("not an extension equivalence: inclusions of pi_1 disagree")
    St = compatible_sections(E, Et, phi_M, phi_G, S, hdt)
    cx, cxt = CmComplex(E, M, hd), CmComplex(Et, M, hdt)
    src_sp, tgt_sp = cxt.space(2), cx.space(2)
    r = src_sp.r
    rows = []
    for m, h, g in tgt_sp.tuples():
        base = src_sp.index((phi_M[m], phi_G[h], phi_G[g])) * r
        for j in range(r):
            rows.append({base + j: 1})
    T = AbHom(src_sp.group, tgt_sp.group, rows)
    st, stt = st_groups(cx, S), st_groups(cxt, St)
    zero_s, zero_t = Subgroup.trivial(tgt_sp.group), Subgroup.trivial(src_sp.group)
    zmap = induced_hom(Subquotient(stt.z_subgroup, zero_t), Subquotient(st.z_subgroup, zero_s), T)
    bmap = induced_hom(Subquotient(stt.b_subgroup, zero_t), Subquotient(st.b_subgroup, zero_s), T)
    hmap = induced_hom(stt.h, st.h, T)
    return TransportResult(zmap, is_isomorphism(zmap), is_isomorphism(bmap), is_isomorphism(hmap), St)
