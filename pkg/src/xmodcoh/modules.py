"""Abelian coefficient modules with a left group action by integer matrices."""

from __future__ import annotations

from .abelian import AbHom, FPAbelianGroup, hom_subquotients
from .groups import AxiomError


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))] for i in range(len(a))]


class GModule:
    """An abelian group ``coeffs`` with ``g . x = action[g] @ x``.

    ``action[g]`` is a square integer matrix on ``coeffs`` coordinates.
    """

    def __init__(self, group, coeffs, action=None, name=None):
        self.group = group
        self.coeffs = coeffs
        r = coeffs.ngens
        ident = [[int(i == j) for j in range(r)] for i in range(r)]
        if action is None:
            action = [ident] * group.order
        if len(action) != group.order:
            raise AxiomError("shape", None, "one action matrix per group element is required")
        self.action = [tuple(tuple(int(x) for x in row) for row in m) for m in action]
        for m in self.action:
            if len(m) != r or any(len(row) != r for row in m):
                raise AxiomError("shape", None, "action matrices must be square of the coefficient rank")
        self.name = name
        self._trivial = all(m == tuple(map(tuple, ident)) for m in self.action)

    @property
    def is_trivial_action(self):
        return self._trivial

    def act(self, g, x):
        if self._trivial or g == 0:
            return self.coeffs.reduce(x)
        m = self.action[g]
        return self.coeffs.reduce(sum(c * v for c, v in zip(row, x)) for row in m)

    def hom(self, g):
        return AbHom(self.coeffs, self.coeffs, self.action[g])

    def restrict(self, proj, group):
        """Pull back along a group map given as a list ``proj``."""
        return GModule(group, self.coeffs, [self.action[proj[g]] for g in range(group.order)], self.name)

    def __repr__(self):
        return f"GModule({self.coeffs}, order {self.group.order})"


def trivial_module(group, factors, name=None):
    coeffs = factors if isinstance(factors, FPAbelianGroup) else FPAbelianGroup(factors)
    return GModule(group, coeffs, None, name)


def module_from_generators(group, coeffs, gen_action, name=None):
    """Close an action given on some group elements under products."""
    r = coeffs.ngens
    if r == 0:
        return GModule(group, coeffs, None, name)
    ident = tuple(tuple(int(i == j) for j in range(r)) for i in range(r))
    mats = {0: ident}
    frontier = [0]
    gens = {int(g): tuple(tuple(int(x) for x in row) for row in m) for g, m in gen_action.items()}
    while frontier:
        x = frontier.pop()
        for s, ms in gens.items():
            y = group.table[s][x]
            prod = tuple(
                tuple(v % d if d else v for v in row) for row, d in zip(_matmul(ms, mats[x]), coeffs.factors)
            )
            if y not in mats:
                mats[y] = prod
                frontier.append(y)
    if len(mats) != group.order:
        raise AxiomError("shape", None, "action generators do not generate the group")
    return validate_gmodule(GModule(group, coeffs, [mats[g] for g in range(group.order)], name))


def validate_gmodule(m):
    """Each matrix must be an automorphism; matrices must compose like the group."""
    c = m.coeffs
    for g in range(m.group.order):
        h = m.hom(g)
        w = h.well_defined_witness()
        if w is not None:
            raise AxiomError("not an automorphism", (g,), f"action of {g} is not well defined on generator {w}")
        sq = hom_subquotients(h)
        if not (sq.kernel.is_trivial() and sq.cokernel.is_trivial()):
            raise AxiomError("not an automorphism", (g,))
    r = c.ngens
    for i in range(r):
        if not c.is_zero([m.action[0][j][i] - int(i == j) for j in range(r)]):
            raise AxiomError("composition mismatch", (0,), "identity must act trivially")
    for g in range(m.group.order):
        for h in range(m.group.order):
            gh = m.group.table[g][h]
            for i in range(r):
                e = [int(i == j) for j in range(r)]
                if m.act(gh, e) != m.act(g, m.act(h, e)):
                    raise AxiomError("composition mismatch", (g, h))
    return m
