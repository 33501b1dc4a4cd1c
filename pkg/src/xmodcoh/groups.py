"""Finite groups given by multiplication tables.

Elements are indices ``0 .. n-1`` and the identity is always index 0.
"""

from __future__ import annotations

from .abelian import FPAbelianGroup, _present_matrix


class AxiomError(ValueError):
    """A structure violates one of its defining axioms; ``witness`` names elements."""

    def __init__(self, axiom, witness, detail=""):
        self.axiom = axiom
        self.witness = witness
        msg = f"{axiom}: witness {witness}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class FiniteGroup:
    __slots__ = ("table", "order", "inverses", "name")

    def __init__(self, table, inverses, name=None):
        self.table = table
        self.order = len(table)
        self.inverses = inverses
        self.name = name

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverses[a]

    def prod(self, *xs):
        out = 0
        for x in xs:
            out = self.table[out][x]
        return out

    def conj(self, g, x):
        """``g x g^-1``."""
        t = self.table
        return t[t[g][x]][self.inverses[g]]

    def elements(self):
        return range(self.order)

    def is_abelian(self):
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def element_order(self, a):
        k, x = 1, a
        while x:
            x = self.table[x][a]
            k += 1
        return k

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order}{', ' + self.name if self.name else ''})"


def validate_group(table, name=None):
    """Check the group axioms for an index table; identity must be index 0."""
    try:
        table = tuple(tuple(int(x) for x in row) for row in table)
    except TypeError as exc:
        raise AxiomError("shape", None, "table must be a list of rows") from exc
    n = len(table)
    if n == 0:
        raise AxiomError("shape", None, "empty table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise AxiomError("shape", (i,), f"row {i} has length {len(row)}, expected {n}")
        for j, x in enumerate(row):
            if not 0 <= x < n:
                raise AxiomError("shape", (i, j), f"entry {x} out of range")
    for x in range(n):
        if table[0][x] != x or table[x][0] != x:
            raise AxiomError("missing identity", (0, x), "index 0 must be a two-sided identity")
    inverses = []
    for a in range(n):
        row = table[a]
        try:
            b = row.index(0)
        except ValueError:
            raise AxiomError("missing inverse", (a,)) from None
        if table[b][a] != 0:
            raise AxiomError("missing inverse", (a, b), "right inverse is not a left inverse")
        inverses.append(b)
    for a in range(n):
        ra = table[a]
        for b in range(n):
            rab = table[ra[b]]
            rb = table[b]
            for c in range(n):
                if rab[c] != ra[rb[c]]:
                    raise AxiomError("non-associative", (a, b, c))
    return FiniteGroup(table, tuple(inverses), name)


def _trusted(table, name=None):
    table = tuple(tuple(r) for r in table)
    inv = tuple(row.index(0) for row in table)
    return FiniteGroup(table, inv, name)


def cyclic_group(n, name=None):
    return _trusted([[(i + j) % n for j in range(n)] for i in range(n)], name or f"C{n}")


def direct_product(g, h):
    """Elements ``(a, b)`` indexed ``a * |h| + b``."""
    m = h.order
    tab = [
        [g.table[a1][a2] * m + h.table[b1][b2] for a2 in range(g.order) for b2 in range(m)]
        for a1 in range(g.order)
        for b1 in range(m)
    ]
    return _trusted(tab)


def group_from_elements(elements, mul, name=None):
    """Table group on a list of hashable elements (identity first) under ``mul``."""
    index = {e: i for i, e in enumerate(elements)}
    tab = [[index[mul(a, b)] for b in elements] for a in elements]
    return validate_group(tab, name)


class GroupHom:
    __slots__ = ("source", "target", "map")

    def __init__(self, source, target, mapping, *, check=True):
        self.source = source
        self.target = target
        self.map = tuple(int(x) for x in mapping)
        if check:
            if len(self.map) != source.order:
                raise AxiomError("shape", None, "homomorphism table has the wrong length")
            for x in self.map:
                if not 0 <= x < target.order:
                    raise AxiomError("shape", (x,), "image index out of range")
            w = self.failure()
            if w is not None:
                raise AxiomError("not a homomorphism", w)

    def failure(self):
        f, s, t = self.map, self.source.table, self.target.table
        if f[0] != 0:
            return (0,)
        for a in range(self.source.order):
            for b in range(self.source.order):
                if f[s[a][b]] != t[f[a]][f[b]]:
                    return (a, b)
        return None

    def __call__(self, x):
        return self.map[x]

    def kernel(self):
        return [x for x in range(self.source.order) if self.map[x] == 0]

    def image(self):
        return sorted(set(self.map))


def generated_subgroup(g, gens):
    elems = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = g.table[x][s]
            if y not in elems:
                elems.add(y)
                frontier.append(y)
    return sorted(elems)


def is_normal(g, elems):
    es = set(elems)
    return all(g.conj(x, n) in es for x in range(g.order) for n in elems)


def subgroup(g, elems, name=None):
    """``(H, embedding)`` for a subset closed under the product; sorted, identity first."""
    elems = sorted(set(elems))
    if not elems or elems[0] != 0:
        raise AxiomError("not a subgroup", None, "identity missing")
    index = {e: i for i, e in enumerate(elems)}
    try:
        tab = [[index[g.table[a][b]] for b in elems] for a in elems]
    except KeyError:
        raise AxiomError("not a subgroup", None, "subset is not closed") from None
    return _trusted(tab, name), list(elems)


class Quotient:
    """``G / N`` with cosets ordered by their minimal element."""

    def __init__(self, g, normal):
        normal = sorted(set(normal))
        if not is_normal(g, normal):
            raise AxiomError("not normal", None)
        proj = [-1] * g.order
        reps = []
        for x in range(g.order):
            if proj[x] < 0:
                k = len(reps)
                reps.append(x)
                for n in normal:
                    proj[g.table[x][n]] = k
        tab = [[proj[g.table[a][b]] for b in reps] for a in reps]
        self.group = _trusted(tab)
        self.proj = proj
        self.reps = reps
        self.normal = normal
        self.parent = g

    def coset(self, k):
        return [x for x in range(self.parent.order) if self.proj[x] == k]


def minimal_generators(g, elems=None):
    """Greedy generating set of the subgroup on ``elems`` (default all of ``g``)."""
    elems = sorted(elems) if elems is not None else list(range(g.order))
    gens = []
    span = {0}
    for x in elems:
        if x not in span:
            gens.append(x)
            span = set(generated_subgroup(g, gens))
    return gens


class AbelianPresentation:
    """Invariant-factor form of a finite abelian subgroup of ``g``.

    The subgroup is presented on all its elements with the relations
    ``e_a + e_s = e_{as}`` for generators ``s``, then brought to canonical form.
    """

    def __init__(self, g, elems):
        elems = sorted(set(elems))
        pos = {e: i for i, e in enumerate(elems)}
        for a in elems:
            for b in elems:
                if g.table[a][b] != g.table[b][a]:
                    raise AxiomError("non-abelian", (a, b))
        gens = minimal_generators(g, elems)
        k = len(elems)
        rels = []
        r0 = [0] * k
        r0[pos[0]] = 1
        rels.append(r0)
        for a in elems:
            for s in gens:
                r = [0] * k
                r[pos[a]] += 1
                r[pos[s]] += 1
                r[pos[g.table[a][s]]] -= 1
                rels.append(r)
        pres = _present_matrix(k, rels)
        self.group: FPAbelianGroup = pres.group
        self.encode_map = {e: pres.encode([int(j == i) for j in range(k)]) for i, e in enumerate(elems)}
        self.decode_map = {v: e for e, v in self.encode_map.items()}
        if len(self.decode_map) != k:
            raise AxiomError("internal inconsistency", None, "abelian presentation is not faithful")
        self.elements = elems
        self.parent = g

    def encode(self, x):
        return self.encode_map[x]

    def decode(self, coords):
        return self.decode_map[self.group.reduce(coords)]
