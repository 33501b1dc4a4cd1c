"""Simplicial groups truncated at degree 2.

A truncated simplicial group has levels ``G0, G1, G2``, faces
``d0, d1: G1 -> G0`` and ``d0, d1, d2: G2 -> G1`` and degeneracies
``s0: G0 -> G1`` and ``s0, s1: G1 -> G2``.  Degree 3 is never needed: the
analysed 3-cochains only use ``N2`` as a domain factor, through ``d0``.

Maps are stored as index lists; ``f[x]`` is the image of ``x``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .abelian import AbHom, Subgroup, Subquotient, induced_hom, is_isomorphism
from .bar import bar_differential, bar_space, group_cohomology
from .cmcohom import CmComplex, Verdict
from .cochains import CochainSpace, Cohomology, build_differential
from .crossed import CrossedModule, validate_crossed_module
from .groups import AbelianPresentation, AxiomError, FiniteGroup, GroupHom, Quotient, _trusted, subgroup
from .modules import GModule


@dataclass
class TruncatedSimplicialGroup:
    G0: FiniteGroup
    G1: FiniteGroup
    G2: FiniteGroup
    faces1: tuple  # (d0, d1): G1 -> G0
    faces2: tuple  # (d0, d1, d2): G2 -> G1
    degen0: tuple  # (s0,): G0 -> G1
    degen1: tuple  # (s0, s1): G1 -> G2
    name: str | None = None

    @property
    def levels(self):
        return (self.G0, self.G1, self.G2)


TSG = TruncatedSimplicialGroup


def _compose(f, g):
    """``f o g`` for index lists."""
    return [f[x] for x in g]


def _identity(n):
    return list(range(n))


def validate_tsg(G):
    """Check homomorphisms and every simplicial identity that stays within degree 2."""
    G0, G1, G2 = G.levels
    shapes = [
        ("d0: G1 -> G0", G.faces1[0], G1, G0),
        ("d1: G1 -> G0", G.faces1[1], G1, G0),
        ("d0: G2 -> G1", G.faces2[0], G2, G1),
        ("d1: G2 -> G1", G.faces2[1], G2, G1),
        ("d2: G2 -> G1", G.faces2[2], G2, G1),
        ("s0: G0 -> G1", G.degen0[0], G0, G1),
        ("s0: G1 -> G2", G.degen1[0], G1, G2),
        ("s1: G1 -> G2", G.degen1[1], G1, G2),
    ]
    for label, f, src, tgt in shapes:
        try:
            GroupHom(src, tgt, f)
        except AxiomError as e:
            raise AxiomError(e.axiom, e.witness, label) from None
    (d0, d1), (e0, e1, e2) = G.faces1, G.faces2
    (s0,), (t0, t1) = G.degen0, G.degen1
    id0, id1 = _identity(G0.order), _identity(G1.order)
    relations = [
        ("d0 s0 = id on G0", _compose(d0, s0), id0),
        ("d1 s0 = id on G0", _compose(d1, s0), id0),
        ("d0 s0 = id on G1", _compose(e0, t0), id1),
        ("d1 s0 = id on G1", _compose(e1, t0), id1),
        ("d2 s0 = s0 d1 on G1", _compose(e2, t0), _compose(s0, d1)),
        ("d0 s1 = s0 d0 on G1", _compose(e0, t1), _compose(s0, d0)),
        ("d1 s1 = id on G1", _compose(e1, t1), id1),
        ("d2 s1 = id on G1", _compose(e2, t1), id1),
        ("d0 d1 = d0 d0 on G2", _compose(d0, e1), _compose(d0, e0)),
        ("d0 d2 = d1 d0 on G2", _compose(d0, e2), _compose(d1, e0)),
        ("d1 d2 = d1 d1 on G2", _compose(d1, e2), _compose(d1, e1)),
        ("s1 s0 = s0 s0 on G0", _compose(t1, s0), _compose(t0, s0)),
    ]
    for label, lhs, rhs in relations:
        for x, (a, b) in enumerate(zip(lhs, rhs)):
            if a != b:
                raise AxiomError("simplicial identity", (label, x), f"{label} fails at element {x}")
    return G


# ---------------------------------------------------------------------------
# Moore complex and homotopy groups


@dataclass
class MooreData:
    N0: FiniteGroup
    N1: FiniteGroup
    N2: FiniteGroup
    N1_elements: list  # N1 index -> G1 index
    N2_elements: list  # N2 index -> G2 index
    boundary1: list  # N1 -> N0
    boundary2: list  # N2 -> N1
    B0: list  # subset of N0
    B1: list  # subset of N1


def moore(G):
    G0, G1, G2 = G.levels
    d0, d1 = G.faces1
    e0, e1, e2 = G.faces2
    n1 = [x for x in range(G1.order) if d1[x] == 0]
    n2 = [x for x in range(G2.order) if e1[x] == 0 and e2[x] == 0]
    N1, n1 = subgroup(G1, n1, "N1")
    N2, n2 = subgroup(G2, n2, "N2")
    pos1 = {x: i for i, x in enumerate(n1)}
    b1 = [d0[x] for x in n1]
    b2 = []
    for x in n2:
        y = e0[x]
        if y not in pos1:
            raise AxiomError("internal inconsistency", (x,), "d0 of an N2 element is not in N1")
        b2.append(pos1[y])
    for i in range(N2.order):
        if b1[b2[i]] != 0:
            raise AxiomError("internal inconsistency", (i,), "boundary of boundary is not trivial")
    B0, B1 = sorted(set(b1)), sorted(set(b2))
    # normality of the boundary subgroups
    for g in range(G0.order):
        for b in B0:
            if G0.conj(g, b) not in B0:
                raise AxiomError("internal inconsistency", (g, b), "B0 is not normal in G0")
    for g in range(N1.order):
        for b in B1:
            if N1.conj(g, b) not in B1:
                raise AxiomError("internal inconsistency", (g, b), "B1 is not normal in N1")
    return MooreData(G0, N1, N2, n1, n2, b1, b2, B0, B1)


@dataclass
class SimplicialHomotopy:
    pi0: FiniteGroup
    proj: list  # G0 -> pi0
    pi1_pres: AbelianPresentation  # inside N1 / B1
    pi1_module: GModule
    cycles: list  # ker(boundary) as N1 indices
    cycle_quotient: Quotient  # N1 / B1

    @property
    def pi1(self):
        return self.pi1_pres.group


def homotopy01(G, md=None):
    """``pi_0 = N0 / B0`` and ``pi_1 = ker(N1 -> N0) / B1`` with the action through ``s0``."""
    md = md or moore(G)
    q0 = Quotient(md.N0, md.B0)
    cycles = [i for i in range(md.N1.order) if md.boundary1[i] == 0]
    q1 = Quotient(md.N1, md.B1)
    cyc_classes = sorted({q1.proj[c] for c in cycles})
    pres = AbelianPresentation(q1.group, cyc_classes)
    pos1 = {x: i for i, x in enumerate(md.N1_elements)}
    s0 = G.degen0[0]
    G1 = G.G1
    r = pres.group.ngens
    action = []
    for p in range(q0.group.order):
        g = q0.reps[p]
        sg = s0[g]
        cols = []
        for i in range(r):
            cls = pres.decode([int(i == j) for j in range(r)])
            k = md.N1_elements[q1.reps[cls]]
            img = pos1[G1.conj(sg, k)]
            cols.append(pres.encode(q1.proj[img]))
        action.append([[c[j] for c in cols] for j in range(r)])
    module = GModule(q0.group, pres.group, action, "pi1")
    return SimplicialHomotopy(q0.group, q0.proj, pres, module, cycles, q1)


# ---------------------------------------------------------------------------
# Truncation and coskeleton


def truncate0(G):
    md = moore(G)
    return Quotient(md.N0, md.B0).group


def truncate1(G):
    """Crossed module ``N1 / B1 -> N0`` with the action through ``s0``-conjugation."""
    md = moore(G)
    q1 = Quotient(md.N1, md.B1)
    s0 = G.degen0[0]
    pos1 = {x: i for i, x in enumerate(md.N1_elements)}
    mu = [md.boundary1[q1.reps[c]] for c in range(q1.group.order)]
    action = []
    for g in range(md.N0.order):
        sg = s0[g]
        row = []
        for c in range(q1.group.order):
            k = md.N1_elements[q1.reps[c]]
            row.append(q1.proj[pos1[G.G1.conj(sg, k)]])
        action.append(row)
    V = CrossedModule(md.N0, q1.group, mu, action, "Trunc1")
    try:
        return validate_crossed_module(V)
    except AxiomError as e:
        raise AxiomError("internal inconsistency", e.witness, f"truncation violates {e.axiom}") from None


def _theta_ops(n):
    """Faces ``[n-1] -> [n]`` and degeneracies ``[n+1] -> [n]`` as tuples of images."""
    faces = [tuple(i if i < k else i + 1 for i in range(n)) for k in range(n + 1)]
    degens = [tuple(i if i <= k else i - 1 for i in range(n + 2)) for k in range(n + 1)]
    return faces, degens


class _CoskLevel:
    """``M^n x| G`` on tuples ``(m_{n-1}, ..., m_0, g)``."""

    def __init__(self, V, n):
        self.V, self.n = V, n
        M, G = V.module, V.group
        self.elements = list(itertools.product(*([range(M.order)] * n + [range(G.order)])))
        self.index = {e: i for i, e in enumerate(self.elements)}

    def mul(self, a, b):
        V, n = self.V, self.n
        M, G = V.module, V.group
        # stored descending: position 0 is m_{n-1}
        ma = list(reversed(a[:n]))
        mb = list(reversed(b[:n]))
        g = a[n]
        out = []
        acc = 0  # m_{i-1} ... m_0
        for i in range(n):
            h = G.mul(V.mu[acc], g)
            out.append(M.mul(ma[i], V.act(h, mb[i])))
            acc = M.mul(ma[i], acc)
        return tuple(reversed(out)) + (G.mul(g, b[n]),)

    def group(self, name):
        tab = [[self.index[self.mul(a, b)] for b in self.elements] for a in self.elements]
        return _trusted(tab, name)


def _cosk_theta(V, elem, theta, n):
    """Simplicial operation of ``theta: [m] -> [n]`` on an element of level ``n``."""
    M, G = V.module, V.group
    ms = list(reversed(elem[:n]))  # ms[k] = m_k
    m = len(theta) - 1

    def block(lo, hi):
        acc = 0
        for k in range(lo, hi):  # m_{hi-1} ... m_lo
            acc = M.mul(ms[k], acc)
        return acc

    comps = [block(theta[i], theta[i + 1]) for i in range(m)]
    g = G.mul(V.mu[block(0, theta[0])], elem[n])
    return tuple(reversed(comps)) + (g,)


def cosk1(V):
    levels = [_CoskLevel(V, n) for n in range(3)]
    groups = [lv.group(f"Cosk1_{n}") for n, lv in enumerate(levels)]

    def op(theta, src_n):
        src, tgt = levels[src_n], levels[len(theta) - 1]
        return [tgt.index[_cosk_theta(V, e, theta, src_n)] for e in src.elements]

    f1, g0 = _theta_ops(1)[0], _theta_ops(0)[1]
    f2, g1 = _theta_ops(2)[0], _theta_ops(1)[1]
    G = TruncatedSimplicialGroup(
        groups[0],
        groups[1],
        groups[2],
        faces1=tuple(op(t, 1) for t in f1),
        faces2=tuple(op(t, 2) for t in f2),
        degen0=tuple(op(t, 0) for t in g0),
        degen1=tuple(op(t, 1) for t in g1),
        name=f"Cosk1({V.name})" if V.name else "Cosk1",
    )
    G.cosk_levels = levels
    return G


def cosk0(group):
    ident = _identity(group.order)
    return TruncatedSimplicialGroup(group, group, group, (ident, ident), (ident,) * 3, (ident,), (ident, ident), "Cosk0")


# ---------------------------------------------------------------------------
# Semidirect decomposition


@dataclass
class SemidirectIso:
    P1: FiniteGroup  # N1 x| N0, pair (a, b) indexed a * |N0| + b
    P2: FiniteGroup  # (N2 x| N1) x| (N1 x| N0)
    phi1: list
    phi1_inv: list
    phi2: list
    phi2_inv: list

    def is_iso(self):
        return all(self.phi1_inv[self.phi1[x]] == x for x in range(len(self.phi1))) and all(
            self.phi2_inv[self.phi2[x]] == x for x in range(len(self.phi2))
        )


def semidirect_iso(G, md=None):
    """Group isomorphisms ``G1 -> N1 x| N0`` and ``G2 -> (N2 x| N1) x| (N1 x| N0)``."""
    md = md or moore(G)
    G0, G1, G2 = G.levels
    d0, d1 = G.faces1
    e0, e1, e2 = G.faces2
    (s0,), (t0, t1) = G.degen0, G.degen1
    n0, n1, n2 = md.N0.order, md.N1.order, md.N2.order
    pos1 = {x: i for i, x in enumerate(md.N1_elements)}
    pos2 = {x: i for i, x in enumerate(md.N2_elements)}
    E1, E2 = md.N1_elements, md.N2_elements

    # N1 x| N0 with N0 acting through s0-conjugation
    def p1_mul(a, b):
        (g1, g0), (h1, h0) = a, b
        return pos1[G1.mul(E1[g1], G1.conj(s0[g0], E1[h1]))], G0.mul(g0, h0)

    pairs1 = [(a, b) for a in range(n1) for b in range(n0)]
    P1 = _trusted([[(lambda r: r[0] * n0 + r[1])(p1_mul(x, y)) for y in pairs1] for x in pairs1], "N1xN0")

    # N2 x| N1 with N1 acting through s0-conjugation
    def q_mul(a, b):
        (g2, h1), (k2, l1) = a, b
        return pos2[G2.mul(E2[g2], G2.conj(t0[E1[h1]], E2[k2]))], pos1[G1.mul(E1[h1], E1[l1])]

    def outer(c, a):
        """``(g1, g0)`` acting on ``(g2, h1)``."""
        g1, g0 = c
        g2, h1 = a
        s0h1 = t0[E1[h1]]
        c1 = G2.mul(t1[E1[g1]], t1[s0[g0]])
        c0 = G2.mul(t0[E1[g1]], t1[s0[g0]])
        x2 = G2.mul(G2.conj(c1, G2.mul(E2[g2], s0h1)), G2.conj(c0, G2.inv(s0h1)))
        y1 = G1.conj(G1.mul(E1[g1], s0[g0]), E1[h1])
        if x2 not in pos2 or y1 not in pos1:
            raise AxiomError("internal inconsistency", (c, a), "outer action leaves the Moore complex")
        return pos2[x2], pos1[y1]

    def p2_mul(a, b):
        (qa, pa), (qb, pb) = a, b
        return q_mul(qa, outer(pa, qb)), p1_mul(pa, pb)

    def enc2(x):
        (g2, h1), (g1, g0) = x
        return ((g2 * n1 + h1) * n1 + g1) * n0 + g0

    elems2 = [((g2, h1), (g1, g0)) for g2 in range(n2) for h1 in range(n1) for g1 in range(n1) for g0 in range(n0)]
    P2 = _trusted([[enc2(p2_mul(x, y)) for y in elems2] for x in elems2], "N2xN1xN1xN0")

    def phi1_pair(x):
        a = d1[x]
        return pos1[G1.mul(x, G1.inv(s0[a]))], a

    phi1 = [(lambda r: r[0] * n0 + r[1])(phi1_pair(x)) for x in range(G1.order)]
    phi1_inv = [G1.mul(E1[a], s0[b]) for a, b in pairs1]

    def phi2_elem(x):
        x2, x1 = e2[x], e1[x]
        g2 = G2.prod(x, G2.inv(t1[x2]), t0[x2], G2.inv(t0[x1]))
        h1 = G1.mul(x1, G1.inv(x2))
        a = d1[x2]
        g1 = G1.mul(x2, G1.inv(s0[a]))
        return (pos2[g2], pos1[h1]), (pos1[g1], a)

    phi2 = [enc2(phi2_elem(x)) for x in range(G2.order)]
    phi2_inv = [
        G2.prod(E2[g2], t0[E1[h1]], t1[E1[g1]], t1[s0[g0]]) for (g2, h1), (g1, g0) in elems2
    ]
    iso = SemidirectIso(P1, P2, phi1, phi1_inv, phi2, phi2_inv)
    for label, src, tgt, f in (("phi1", G1, P1, phi1), ("phi2", G2, P2, phi2)):
        w = GroupHom(src, tgt, f, check=False).failure()
        if w is not None:
            raise AxiomError("internal inconsistency", w, f"{label} is not a homomorphism")
    if not iso.is_iso():
        raise AxiomError("internal inconsistency", None, "semidirect decomposition is not bijective")
    return iso


# ---------------------------------------------------------------------------
# Analysed cochain complex


class AnComplex:
    """Analysed cochains on ``{1}``, ``N0``, ``N1 x N0 x N0`` and
    ``N2 x N1 x N1 x N0 x N1 x N0 x N0``."""

    def __init__(self, G, M, md=None, hom=None):
        self.G = G
        self.md = md or moore(G)
        self.hom = hom or homotopy01(G, self.md)
        if M.group.table != self.hom.pi0.table:
            raise ValueError("coefficients must be a module over pi_0 of the simplicial group")
        self.M = M
        self._d = {}
        self._h = {}

    def space(self, n):
        md = self.md
        a, b, c = md.N0.order, md.N1.order, md.N2.order
        shapes = {0: (), 1: (a,), 2: (b, a, a), 3: (c, b, b, a, b, a, a)}
        return CochainSpace(shapes[n], self.M)

    def differential(self, n):
        if n not in self._d:
            self._d[n] = self._build(n)
        return self._d[n]

    def _build(self, n):
        if not 0 <= n <= 2:
            raise ValueError("analysed differentials are available for 0 <= n <= 2")
        md = self.md
        N0, N1 = md.N0, md.N1
        b1, b2 = md.boundary1, md.boundary2
        s0 = self.G.degen0[0]
        G1 = self.G.G1
        pos1 = {x: i for i, x in enumerate(md.N1_elements)}
        E1 = md.N1_elements
        if n == 0:

            def terms(g0):
                yield 1, 0, ()
                yield -1, g0, ()

        elif n == 1:

            def terms(g1, h0, g0):
                yield 1, 0, (N0.mul(b1[g1], h0),)
                yield -1, 0, (N0.mul(h0, g0),)
                yield 1, h0, (g0,)

        else:

            def terms(g2, k1, h1, k0, g1, h0, g0):
                yield 1, 0, (N1.mul(b2[g2], k1), N0.mul(b1[h1], k0), N0.mul(b1[g1], h0))
                yield -1, 0, (N1.mul(k1, h1), k0, N0.mul(h0, g0))
                conj = pos1[G1.conj(s0[k0], E1[g1])]
                yield 1, 0, (N1.mul(h1, conj), N0.mul(k0, h0), g0)
                yield -1, k0, (g1, h0, g0)

        return build_differential(self.space(n), self.space(n + 1), terms, acting=self.hom.proj)

    def cohomology(self, n):
        if n not in self._h:
            d_in = self.differential(n - 1) if n > 0 else None
            self._h[n] = Cohomology(self.space(n), self.differential(n), d_in, n)
        return self._h[n]


def an_differential(G, M, n):
    return AnComplex(G, M).differential(n)


def an_cohomology(G, M, n):
    return AnComplex(G, M).cohomology(n)


def an_cocycle_conditions(cx, z):
    """The five conditions characterising analysed 2-cocycles through their
    ``N1``- and ``N0``-parts; returns the first failure."""
    md, M = cx.md, cx.M
    N0, N1 = md.N0, md.N1
    b1, b2 = md.boundary1, md.boundary2
    co = M.coeffs
    sp = cx.space(2)
    proj = cx.hom.proj
    s0 = cx.G.degen0[0]
    pos1 = {x: i for i, x in enumerate(md.N1_elements)}
    E1 = md.N1_elements
    zN1 = lambda g1: sp.value(z, g1, 0, 0)  # noqa: E731
    zN0 = lambda h0, g0: sp.value(z, 0, h0, g0)  # noqa: E731
    for g1, h0, g0 in sp.tuples():
        rhs = co.add(co.sub(zN1(g1), zN0(b1[g1], h0)), zN0(h0, g0))
        if sp.value(z, g1, h0, g0) != rhs:
            return Verdict(False, "(a) decomposition", (g1, h0, g0))
    MG = M.restrict(proj, N0)
    if any(bar_differential(N0, MG, 2)(tuple(v for h in range(N0.order) for g in range(N0.order) for v in zN0(h, g)))):
        return Verdict(False, "(b) N0-part is a 2-cocycle", None)
    for h1 in range(N1.order):
        for g1 in range(N1.order):
            rhs = co.sub(co.add(zN1(h1), zN1(g1)), zN0(b1[h1], b1[g1]))
            if zN1(N1.mul(h1, g1)) != rhs:
                return Verdict(False, "(c) multiplicativity", (h1, g1))
    for g1 in range(N1.order):
        for g0 in range(N0.order):
            c = pos1[cx.G.G1.conj(s0[g0], E1[g1])]
            rhs = co.sub(co.add(M.act(proj[g0], zN1(g1)), zN0(N0.conj(g0, b1[g1]), g0)), zN0(g0, b1[g1]))
            if zN1(c) != rhs:
                return Verdict(False, "(d) action", (g1, g0))
    for g2 in range(md.N2.order):
        if zN1(b2[g2]) != zN1(0):
            return Verdict(False, "(e) N2-images", (g2,))
    return Verdict(True)


# ---------------------------------------------------------------------------
# Unit-induced maps on cocycles


@dataclass
class UnitMaps:
    u1: AbHom  # C^1(Trunc0 G, M) -> C^1_an(G, M)
    u2: AbHom  # C^2(Trunc1 G, M) -> C^2_an(G, M)
    u1_inverse: AbHom
    u2_inverse: AbHom
    u1_bijective: bool
    u2_bijective: bool
    coboundaries1: bool
    coboundaries2: bool
    cohomology1: bool
    cohomology2: bool
    truncation: CrossedModule

    @property
    def ok(self):
        return all(
            (self.u1_bijective, self.u2_bijective, self.coboundaries1, self.coboundaries2, self.cohomology1, self.cohomology2)
        )


def _pullback_map(src, tgt, fn):
    """Cochain map ``c -> c o fn`` with ``fn`` mapping target tuples to source tuples."""
    r = src.r
    rows = []
    for args in tgt.tuples():
        base = src.index(fn(*args)) * r
        for j in range(r):
            rows.append({base + j: 1})
    return AbHom(src.group, tgt.group, rows)


def _induced_isos(src_coh, tgt_coh, f):
    zero_s, zero_t = Subgroup.trivial(src_coh.space.group), Subgroup.trivial(tgt_coh.space.group)
    z = induced_hom(Subquotient(src_coh.cocycle_subgroup, zero_s), Subquotient(tgt_coh.cocycle_subgroup, zero_t), f)
    b = induced_hom(Subquotient(src_coh.coboundary_subgroup, zero_s), Subquotient(tgt_coh.coboundary_subgroup, zero_t), f)
    h = induced_hom(src_coh.h_subquotient, tgt_coh.h_subquotient, f)
    return is_isomorphism(z), is_isomorphism(b), is_isomorphism(h)


def unit_cocycle_maps(G, M):
    """``u1(z)(g0) = z(g0 B0)`` and ``u2(z)(g1, h0, g0) = z(g1 B1, h0, g0)``.

    The inverses evaluate on sections: ``z'(p) = z(s(p))`` and
    ``z'(m, h, g) = z(s(m), h, g)``.
    """
    md = moore(G)
    hom = homotopy01(G, md)
    an = AnComplex(G, M, md, hom)
    pi0 = hom.pi0
    q0 = Quotient(md.N0, md.B0)
    T = truncate1(G)
    cm = CmComplex(T, M)
    if cm.hd.pi0.table != pi0.table:
        raise AxiomError("internal inconsistency", None, "truncation has a different pi_0")
    q1 = Quotient(md.N1, md.B1)
    bar1 = bar_space(pi0, M, 1)
    u1 = _pullback_map(bar1, an.space(1), lambda g0: (q0.proj[g0],))
    u1_inv = _pullback_map(an.space(1), bar1, lambda p: (q0.reps[p],))
    u2 = _pullback_map(cm.space(2), an.space(2), lambda g1, h0, g0: (q1.proj[g1], h0, g0))
    u2_inv = _pullback_map(an.space(2), cm.space(2), lambda m, h, g: (q1.reps[m], h, g))
    z1, b1, h1 = _induced_isos(group_cohomology(pi0, M, 1), an.cohomology(1), u1)
    z2, b2, h2 = _induced_isos(cm.cohomology(2), an.cohomology(2), u2)
    return UnitMaps(u1, u2, u1_inv, u2_inv, z1, z2, b1, b2, h1, h2, T)
