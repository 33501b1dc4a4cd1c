"""Exact integer linear algebra over finitely generated abelian groups.

A group is presented as ``Z^n / (d_1 Z + ... + d_n Z)``, one cyclic factor per
coordinate (``d_i = 0`` is a free summand).  :class:`DiagonalGroup` allows any
factor list and is used for cochain spaces; :class:`FPAbelianGroup` is the
canonical invariant-factor form used for every isomorphism-type comparison.

Subgroups are stored as integer lattices ``L`` with ``R <= L <= Z^n`` where
``R`` is the relation lattice, kept in echelon form.  Kernels, images,
cokernels, pullbacks and subquotients all reduce to Smith normal form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

__all__ = [
    "smith_normal_form",
    "canonicalize",
    "Presentation",
    "present",
    "DiagonalGroup",
    "FPAbelianGroup",
    "AbHom",
    "Subgroup",
    "Subquotient",
    "Subquotients",
    "hom_subquotients",
    "pullback",
    "enumerate_group",
    "kernel_on_subgroup",
    "solve",
    "induced_hom",
    "format_factors",
    "EnumerationError",
]


class EnumerationError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Smith normal form


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(a, *, with_inverse=False):
    """Return ``(s, u, v)`` with ``u @ a @ v == s``.

    ``s`` is diagonal with a divisibility chain (zeros last) and ``u``, ``v``
    are unimodular.  The pivot is the entry of smallest nonzero absolute value
    in the remaining block, ties broken row-major.  With ``with_inverse`` the
    inverse of ``u`` is returned as a fourth value.
    """
    a = [list(map(int, row)) for row in a]
    m = len(a)
    n = len(a[0]) if m else 0
    u = _identity(m)
    v = _identity(n)
    ui = _identity(m) if with_inverse else None

    def swap_rows(i, j):
        if i == j:
            return
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]
        if ui is not None:
            for row in ui:
                row[i], row[j] = row[j], row[i]

    def swap_cols(i, j):
        if i == j:
            return
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        if not q:
            return
        ra, rs = a[dst], a[src]
        for k in range(n):
            if rs[k]:
                ra[k] += q * rs[k]
        ua, us = u[dst], u[src]
        for k in range(m):
            if us[k]:
                ua[k] += q * us[k]
        if ui is not None:
            for row in ui:
                if row[dst]:
                    row[src] -= q * row[dst]

    def add_col(dst, src, q):
        if not q:
            return
        for row in a:
            if row[src]:
                row[dst] += q * row[src]
        for row in v:
            if row[src]:
                row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]
        if ui is not None:
            for row in ui:
                row[i] = -row[i]

    for t in range(min(m, n)):
        while True:
            best = None
            for i in range(t, m):
                row = a[i]
                for j in range(t, n):
                    x = row[j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
                        if best[0] == 1:
                            break
                if best is not None and best[0] == 1:
                    break
            if best is None:
                if with_inverse:
                    return a, u, v, ui
                return a, u, v
            _, pi, pj = best
            swap_rows(t, pi)
            swap_cols(t, pj)
            if a[t][t] < 0:
                negate_row(t)
            p = a[t][t]
            clean = True
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    if a[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    if a[t][j]:
                        clean = False
            if not clean:
                continue
            bad = None
            for i in range(t + 1, m):
                for j in range(t + 1, n):
                    if a[i][j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
    if with_inverse:
        return a, u, v, ui
    return a, u, v


# ---------------------------------------------------------------------------
# Groups in diagonal form


def format_factors(factors):
    if not factors:
        return "0"
    return " + ".join("Z" if d == 0 else f"Z/{d}" for d in factors)


class DiagonalGroup:
    """``Z^n`` modulo ``d_i Z`` in coordinate ``i``; factors need not form a chain."""

    def __init__(self, factors):
        factors = tuple(int(d) for d in factors)
        for d in factors:
            if d < 0 or d == 1:
                raise ValueError(f"cyclic factors must be 0 or at least 2, got {d}")
        self.factors = factors

    @property
    def ngens(self):
        return len(self.factors)

    @property
    def is_finite(self):
        return all(self.factors)

    @property
    def order(self):
        """Group order, or ``None`` when infinite."""
        return prod(self.factors) if self.is_finite else None

    def reduce(self, coords):
        coords = tuple(coords)
        if len(coords) != len(self.factors):
            raise ValueError("coordinate vector has the wrong length")
        return tuple(x % d if d else x for x, d in zip(coords, self.factors))

    def zero(self):
        return (0,) * len(self.factors)

    def add(self, x, y):
        return self.reduce(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return self.reduce(a - b for a, b in zip(x, y))

    def neg(self, x):
        return self.reduce(-a for a in x)

    def scale(self, k, x):
        return self.reduce(k * a for a in x)

    def is_zero(self, x):
        return not any(self.reduce(x))

    def elements(self):
        return enumerate_group(self)

    def invariants(self):
        """Invariant factors of this group (canonical form)."""
        return present(self, []).group

    def __eq__(self, other):
        return type(self) is type(other) and self.factors == other.factors

    def __hash__(self):
        return hash((type(self).__name__, self.factors))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.factors)})"

    def __str__(self):
        return format_factors(self.factors)


class FPAbelianGroup(DiagonalGroup):
    """Finitely generated abelian group in invariant-factor form."""

    def __init__(self, invariant_factors):
        super().__init__(invariant_factors)
        fs = self.factors
        seen_zero = False
        prev = 1
        for d in fs:
            if d == 0:
                seen_zero = True
                continue
            if seen_zero:
                raise ValueError("zero factors must be listed last")
            if d % prev:
                raise ValueError(f"factors {list(fs)} do not form a divisibility chain")
            prev = d

    @property
    def invariant_factors(self):
        return self.factors

    @property
    def rank(self):
        return sum(1 for d in self.factors if d == 0)

    def is_trivial(self):
        return not self.factors

    def invariants(self):
        return self


def enumerate_group(g):
    """All elements, lexicographic in coordinates, identity first."""
    if not g.is_finite:
        raise EnumerationError(f"cannot enumerate the infinite group {format_factors(g.factors)}")
    return [tuple(c) for c in itertools.product(*(range(d) for d in g.factors))]


# ---------------------------------------------------------------------------
# Presentations of cokernels


@dataclass(frozen=True)
class Presentation:
    """``Z^k / columns(relations)`` in invariant-factor form.

    ``to_new`` (r x k) sends old coordinates to the canonical ones and
    ``from_new`` (k x r) sends canonical coordinates back to representatives.
    """

    group: FPAbelianGroup
    to_new: tuple
    from_new: tuple

    def encode(self, old):
        return self.group.reduce(sum(c * x for c, x in zip(row, old)) for row in self.to_new)

    def lift(self, new):
        return [sum(row[i] * new[i] for i in range(len(new))) for row in self.from_new]


def _present_matrix(k, relations):
    """Canonical form of ``Z^k`` modulo the given relation columns (list of vectors)."""
    if k == 0:
        return Presentation(FPAbelianGroup([]), (), ())
    mat = [[rel[i] for rel in relations] for i in range(k)] if relations else [[0] for _ in range(k)]
    s, u, _v, ui = smith_normal_form(mat, with_inverse=True)
    diag = [abs(s[i][i]) if i < len(s[0]) else 0 for i in range(k)]
    keep = [i for i in range(k) if diag[i] != 1]
    group = FPAbelianGroup([diag[i] for i in keep])
    to_new = tuple(tuple(u[i]) for i in keep)
    from_new = tuple(tuple(ui[r][i] for i in keep) for r in range(k))
    return Presentation(group, to_new, from_new)


def present(g, relations):
    """Present ``g`` modulo extra relation vectors in invariant-factor form."""
    rels = [[d if j == i else 0 for j in range(g.ngens)] for i, d in enumerate(g.factors) if d]
    rels += [list(r) for r in relations]
    return _present_matrix(g.ngens, rels)


def canonicalize(relations, ngens=None):
    """Cokernel of the relation matrix (columns are relations) on ``ngens`` generators.

    Returns ``(group, change_of_basis)`` where ``change_of_basis`` converts old
    generator coordinates into coordinates of ``group``.
    """
    relations = [list(map(int, row)) for row in relations]
    if ngens is None:
        ngens = len(relations)
    if len(relations) != ngens:
        raise ValueError("relation matrix must have one row per generator")
    cols = [list(c) for c in zip(*relations)] if relations and relations[0] else []
    p = _present_matrix(ngens, cols)
    return p.group, [list(r) for r in p.to_new]


# ---------------------------------------------------------------------------
# Subgroups as lattices


class Subgroup:
    """A subgroup of a :class:`DiagonalGroup`, stored as a lattice in echelon form.

    The lattice always contains the relation lattice of the ambient group, so
    ``rows`` is a genuine Z-basis of the preimage of the subgroup in ``Z^n``.
    """

    def __init__(self, ambient, generators=()):
        self.ambient = ambient
        n = ambient.ngens
        fs = ambient.factors
        self._pivots = {}
        queue = [list(g) for g in generators]
        while True:
            while queue:
                self._insert(queue.pop(), queue)
            # closure: every annihilator must already lie in the span
            changed = False
            for c in sorted(self._pivots):
                row = self._pivots[c]
                d = fs[c]
                if d:
                    ann = self._reduce([(d // row[c]) * x for x in row])
                    if any(ann) and self._insert(ann, queue):
                        changed = True
            if not changed and not queue:
                break
        rows = []
        for c in range(n):
            if c in self._pivots:
                rows.append(self._pivots[c])
            elif fs[c]:
                rows.append([fs[c] if j == c else 0 for j in range(n)])
        self._size_reduce(rows)
        self.rows = [tuple(r) for r in rows]
        self.pivots = [next(j for j, x in enumerate(r) if x) for r in self.rows]

    def _reduce(self, v):
        fs = self.ambient.factors
        for i, d in enumerate(fs):
            if d:
                v[i] %= d
        return v

    def _insert(self, v, queue):
        """Insert ``v``; return whether the echelon form changed."""
        v = self._reduce(list(v))
        fs = self.ambient.factors
        n = len(v)
        c = 0
        while c < n:
            if not v[c]:
                c += 1
                continue
            p = self._pivots.get(c)
            d = fs[c]
            if p is None:
                if d:
                    # pivot must divide the column modulus: combine with d*e_c
                    g, s, _t = _xgcd(v[c], d)
                    if g != v[c]:
                        queue.append(self._reduce([(d // g) * x for x in v]))
                        v = self._reduce([s * x for x in v])
                elif v[c] < 0:
                    v = [-x for x in v]
                self._pivots[c] = v
                return True
            a, b = p[c], v[c]
            if b % a == 0:
                q = b // a
                v = self._reduce([x - q * y for x, y in zip(v, p)])
                continue
            g, s, t = _xgcd(a, b)
            newp = self._reduce([s * x + t * y for x, y in zip(p, v)])
            v = self._reduce([(a // g) * y - (b // g) * x for x, y in zip(p, v)])
            self._pivots[c] = newp
            queue.append(v)
            return True
        return False

    def _size_reduce(self, rows):
        # reduce entries above each pivot into [0, pivot); ascending order keeps
        # earlier pivot columns untouched
        for i in range(len(rows)):
            r = rows[i]
            c = next(j for j, x in enumerate(r) if x)
            a = r[c]
            for k in range(i):
                q = rows[k][c] // a
                if q:
                    rows[k] = [x - q * y for x, y in zip(rows[k], r)]

    @classmethod
    def full(cls, ambient):
        n = ambient.ngens
        return cls(ambient, [[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def trivial(cls, ambient):
        return cls(ambient, [])

    def coords(self, v):
        """Coordinates of ``v`` in the basis ``rows``; ``None`` if ``v`` is not in the lattice."""
        v = list(v)
        out = []
        for r, c in zip(self.rows, self.pivots):
            for j in range(c):
                if v[j]:
                    return None
            q, rem = divmod(v[c], r[c])
            if rem:
                return None
            out.append(q)
            if q:
                v = [x - q * y for x, y in zip(v, r)]
        if any(v):
            return None
        return out

    def contains(self, v):
        return self.coords(v) is not None

    def contains_subgroup(self, other):
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subgroup)
            and self.ambient.factors == other.ambient.factors
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash(tuple(self.rows))

    def __add__(self, other):
        return Subgroup(self.ambient, list(self.rows) + list(other.rows))

    def intersect(self, other):
        q = Subquotient(Subgroup.full(self.ambient), other)
        return kernel_on_subgroup(q.quotient_matrix(), q.group, self)

    def group(self):
        """This subgroup as an abstract group, with encode/lift maps."""
        return Subquotient(self, Subgroup.trivial(self.ambient))

    def __repr__(self):
        return f"Subgroup(rank={len(self.rows)}, ambient={self.ambient!r})"


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


class Subquotient:
    """The group ``big / small`` for subgroups ``small <= big`` of one ambient group."""

    def __init__(self, big, small):
        if big.ambient.factors != small.ambient.factors:
            raise ValueError("subgroups live in different ambient groups")
        self.big = big
        self.small = small
        rels = []
        for r in small.rows:
            c = big.coords(r)
            if c is None:
                raise ValueError("the smaller subgroup is not contained in the larger one")
            rels.append(c)
        self._pres = _present_matrix(len(big.rows), rels)
        self.group = self._pres.group

    @property
    def ambient(self):
        return self.big.ambient

    def encode(self, v):
        c = self.big.coords(v)
        if c is None:
            raise ValueError("element does not lie in the subgroup")
        return self._pres.encode(c)

    def try_encode(self, v):
        c = self.big.coords(v)
        return None if c is None else self._pres.encode(c)

    def lift(self, coords):
        alpha = self._pres.lift(coords)
        n = self.ambient.ngens
        out = [0] * n
        for a, r in zip(alpha, self.big.rows):
            if a:
                for j in range(n):
                    if r[j]:
                        out[j] += a * r[j]
        return self.ambient.reduce(out)

    def generators(self):
        k = self.group.ngens
        return [self.lift([int(i == j) for j in range(k)]) for i in range(k)]

    def quotient_matrix(self):
        """Matrix of ``ambient -> ambient / small`` when ``big`` is everything."""
        n = self.ambient.ngens
        cols = [self.encode([int(i == j) for j in range(n)]) for i in range(n)]
        return AbHom(self.ambient, self.group, [list(r) for r in zip(*cols)] if cols else [[] for _ in range(self.group.ngens)])


# ---------------------------------------------------------------------------
# Homomorphisms


class AbHom:
    """Homomorphism given by an integer matrix on generator coordinates.

    ``matrix`` has one row per target coordinate; rows are stored sparsely.
    """

    def __init__(self, source, target, matrix, *, check=False):
        self.source = source
        self.target = target
        rows = []
        for row in matrix:
            if isinstance(row, dict):
                rows.append({j: x for j, x in row.items() if x})
            else:
                row = list(row)
                if len(row) != source.ngens:
                    raise ValueError("matrix row length differs from source rank")
                rows.append({j: int(x) for j, x in enumerate(row) if x})
        if len(rows) != target.ngens:
            raise ValueError("matrix row count differs from target rank")
        self.rows = rows
        if check:
            bad = self.well_defined_witness()
            if bad is not None:
                raise ValueError(f"not well defined: generator {bad} of finite order maps to an element of larger order")

    @property
    def matrix(self):
        n = self.source.ngens
        return [[r.get(j, 0) for j in range(n)] for r in self.rows]

    def __call__(self, x):
        return self.target.reduce(sum(c * x[j] for j, c in r.items()) for r in self.rows)

    def apply_raw(self, x):
        return [sum(c * x[j] for j, c in r.items()) for r in self.rows]

    def column(self, j):
        return [r.get(j, 0) for r in self.rows]

    def well_defined_witness(self):
        for j, d in enumerate(self.source.factors):
            if d and not self.target.is_zero([d * x for x in self.column(j)]):
                return j
        return None

    def is_zero(self):
        return all(self.target.is_zero(self.column(j)) for j in range(self.source.ngens))

    def compose(self, other):
        """``self o other``."""
        rows = []
        for r in self.rows:
            out = {}
            for k, c in r.items():
                for j, x in other.rows[k].items():
                    out[j] = out.get(j, 0) + c * x
            rows.append(out)
        return AbHom(other.source, self.target, rows)

    def __repr__(self):
        return f"AbHom({self.source!r} -> {self.target!r})"


def kernel_on_subgroup(f, target, sub):
    """``{x in sub : f(x) = 0 in target}`` as a :class:`Subgroup` of ``f``'s source.

    ``f`` is an :class:`AbHom` (or anything with sparse ``rows``).  Rows of the
    restricted matrix are compressed per target modulus before the final Smith
    normal form, so a huge target costs only one pass over its rows.
    """
    basis = sub.rows
    r = len(basis)
    columns = list(zip(*basis)) if basis else [()] * sub.ambient.ngens
    blocks = {}
    for t, frow in enumerate(f.rows):
        if not frow:
            continue
        y = [0] * r
        for j, c in frow.items():
            for i, b in enumerate(columns[j]):
                if b:
                    y[i] += c * b
        d = target.factors[t]
        blk = blocks.get(d)
        if blk is None:
            blk = blocks[d] = _Echelon(d, r)
        blk.insert(y)
    cons = []
    mods = []
    for d, blk in blocks.items():
        for row in blk.rows():
            cons.append(row)
            mods.append(d)
    if not cons:
        return Subgroup(sub.ambient, basis)
    k = len(cons)
    mat = [cons[i] + [mods[i] if j == i else 0 for j in range(k)] for i in range(k)]
    s, _u, v = smith_normal_form(mat)
    rank = sum(1 for i in range(min(k, r + k)) if s[i][i])
    gens = []
    n = sub.ambient.ngens
    for col in range(rank, r + k):
        alpha = [v[i][col] for i in range(r)]
        x = [0] * n
        for a, b in zip(alpha, basis):
            if a:
                for j in range(n):
                    if b[j]:
                        x[j] += a * b[j]
        gens.append(x)
    return Subgroup(sub.ambient, gens)


class _Echelon:
    """Sparse row echelon form modulo ``d`` (``d = 0``: over Z) with unimodular steps only."""

    def __init__(self, d, width):
        self.d = d
        self.width = width
        self.piv = {}

    def _combine(self, s, x, t, y):
        """``s*x + t*y`` for sparse rows, reduced modulo ``d``."""
        d = self.d
        out = {}
        for j in x.keys() | y.keys():
            v = s * x.get(j, 0) + t * y.get(j, 0)
            if d:
                v %= d
            if v:
                out[j] = v
        return out

    def insert(self, v):
        d = self.d
        v = {j: (x % d if d else x) for j, x in enumerate(v) if x}
        v = {j: x for j, x in v.items() if x}
        while v:
            c = min(v)
            p = self.piv.get(c)
            if p is None:
                self.piv[c] = v
                return
            a, b = p[c], v[c]
            if b % a == 0:
                q = b // a
                for j, x in p.items():
                    y = v.get(j, 0) - q * x
                    if d:
                        y %= d
                    if y:
                        v[j] = y
                    else:
                        v.pop(j, None)
                continue
            g, s, t = _xgcd(a, b)
            newp = self._combine(s, p, t, v)
            v = self._combine(a // g, v, -(b // g), p)
            if c not in newp:
                # happens only modulo d when the gcd vanishes; keep both rows
                newp, v = v, newp
            self.piv[c] = newp

    def rows(self):
        out = []
        for c in sorted(self.piv):
            row = [0] * self.width
            for j, x in self.piv[c].items():
                row[j] = x
            out.append(row)
        return out


def solve(f, target, t, sub=None):
    """Some ``x`` in ``sub`` (default: whole source) with ``f(x) = t``, or ``None``."""
    src = f.source
    sub = sub or Subgroup.full(src)
    ext = DiagonalGroup((0,) + src.factors)
    rows = []
    for i, r in enumerate(f.rows):
        nr = {j + 1: c for j, c in r.items()}
        if t[i]:
            nr[0] = -t[i]
        rows.append(nr)
    g = AbHom(ext, target, rows)
    ext_sub = Subgroup(ext, [[1] + [0] * src.ngens] + [[0] + list(b) for b in sub.rows])
    ker = kernel_on_subgroup(g, target, ext_sub)
    for r, c in zip(ker.rows, ker.pivots):
        if c == 0:
            if r[0] == 1:
                return src.reduce(r[1:])
            return None
        break
    return None


@dataclass
class Subquotients:
    kernel: FPAbelianGroup
    kernel_embedding: AbHom
    image: FPAbelianGroup
    image_embedding: AbHom
    cokernel: FPAbelianGroup
    cokernel_projection: AbHom
    kernel_subgroup: Subgroup


def _hom_from_lift(sq, f=None):
    """AbHom from ``sq.group`` into the ambient (optionally followed by ``f``)."""
    gens = sq.generators()
    if f is not None:
        gens = [f(g) for g in gens]
        tgt = f.target
    else:
        tgt = sq.ambient
    rows = [[g[i] for g in gens] for i in range(tgt.ngens)]
    return AbHom(sq.group, tgt, rows)


def hom_subquotients(f):
    """Kernel, image and cokernel of ``f`` with their canonical maps."""
    src, tgt = f.source, f.target
    full = Subgroup.full(src)
    ker = kernel_on_subgroup(f, tgt, full)
    ksq = Subquotient(ker, Subgroup.trivial(src))
    isq = Subquotient(full, ker)
    img_gens = [f.column(j) for j in range(src.ngens)]
    csq = Subquotient(Subgroup.full(tgt), Subgroup(tgt, img_gens))
    n = tgt.ngens
    proj_cols = [csq.encode([int(i == j) for j in range(n)]) for i in range(n)]
    proj = AbHom(tgt, csq.group, [[c[k] for c in proj_cols] for k in range(csq.group.ngens)])
    return Subquotients(
        kernel=ksq.group,
        kernel_embedding=_hom_from_lift(ksq),
        image=isq.group,
        image_embedding=_hom_from_lift(isq, f),
        cokernel=csq.group,
        cokernel_projection=proj,
        kernel_subgroup=ker,
    )


@dataclass
class Pullback:
    group: FPAbelianGroup
    proj_a: AbHom
    proj_b: AbHom
    subgroup: Subgroup

    def __iter__(self):
        return iter((self.group, self.proj_a, self.proj_b))


def pullback(f, g):
    """Fibre product ``{(a, b) : f(a) = g(b)}`` of ``f: A -> C`` and ``g: B -> C``."""
    if f.target.factors != g.target.factors:
        raise ValueError("pullback needs a common target")
    A, B, C = f.source, g.source, f.target
    na = A.ngens
    ab = DiagonalGroup(A.factors + B.factors)
    rows = []
    for rf, rg in zip(f.rows, g.rows):
        r = dict(rf)
        for j, c in rg.items():
            r[na + j] = -c
        rows.append(r)
    h = AbHom(ab, C, rows)
    ker = kernel_on_subgroup(h, C, Subgroup.full(ab))
    sq = Subquotient(ker, Subgroup.trivial(ab))
    gens = sq.generators()
    pa = AbHom(sq.group, A, [[gv[i] for gv in gens] for i in range(na)])
    pb = AbHom(sq.group, B, [[gv[na + i] for gv in gens] for i in range(B.ngens)])
    return Pullback(sq.group, pa, pb, ker)


def induced_hom(src, tgt, cochain_map):
    """AbHom ``src.group -> tgt.group`` induced by a coordinate map on representatives.

    ``src`` and ``tgt`` are :class:`Subquotient` objects; ``cochain_map`` sends
    ambient vectors of ``src`` to ambient vectors of ``tgt``.
    """
    cols = [tgt.encode(cochain_map(g)) for g in src.generators()]
    k = tgt.group.ngens
    return AbHom(src.group, tgt.group, [[c[i] for c in cols] for i in range(k)])


def is_isomorphism(h):
    sq = hom_subquotients(h)
    return sq.kernel.is_trivial() and sq.cokernel.is_trivial()
