"""Cochain spaces ``Map(X_1 x ... x X_k, M)`` and their cohomology.

A cochain is a flat integer vector: the value on the tuple with index ``t``
occupies coordinates ``t*r .. t*r + r - 1`` where ``r`` is the number of
generators of the coefficient group.  Tuples are ordered lexicographically,
first component most significant.
"""

from __future__ import annotations

import itertools
from math import prod

from .abelian import AbHom, DiagonalGroup, Subgroup, Subquotient, kernel_on_subgroup


class CochainSpace:
    def __init__(self, shape, module):
        self.shape = tuple(int(k) for k in shape)
        self.module = module
        self.size = prod(self.shape)
        self.r = module.coeffs.ngens
        self.group = DiagonalGroup(module.coeffs.factors * self.size)
        strides = []
        s = 1
        for k in reversed(self.shape):
            strides.append(s)
            s *= k
        self._strides = tuple(reversed(strides))

    @property
    def coeffs(self):
        return self.module.coeffs

    def index(self, args):
        return sum(a * s for a, s in zip(args, self._strides))

    def tuples(self):
        return itertools.product(*(range(k) for k in self.shape))

    def value(self, vec, *args):
        i = self.index(args) * self.r
        return self.coeffs.reduce(vec[i : i + self.r])

    def zero(self):
        return (0,) * (self.size * self.r)

    def from_function(self, fn):
        out = []
        red = self.coeffs.reduce
        for args in self.tuples():
            out.extend(red(fn(*args)))
        return tuple(out)

    def reduce(self, vec):
        return self.group.reduce(vec)

    def add(self, x, y):
        return self.group.add(x, y)

    def sub(self, x, y):
        return self.group.sub(x, y)

    def is_zero(self, vec):
        return self.group.is_zero(vec)

    def unit_subgroup(self, predicate):
        """Cochains supported on tuples satisfying ``predicate``."""
        r = self.r
        n = self.group.ngens
        gens = []
        for t, args in enumerate(self.tuples()):
            if predicate(args):
                for j in range(r):
                    v = [0] * n
                    v[t * r + j] = 1
                    gens.append(v)
        return Subgroup(self.group, gens)

    def evaluation(self, tuples_list):
        """Linear map ``c -> (c(t))_t`` into ``M^len(tuples_list)``."""
        r = self.r
        rows = []
        for args in tuples_list:
            base = self.index(args) * r
            for j in range(r):
                rows.append({base + j: 1})
        return AbHom(self.group, DiagonalGroup(self.coeffs.factors * len(tuples_list)), rows)


def build_differential(src, tgt, terms, acting=None):
    """Assemble the matrix of a differential from a term generator.

    ``terms(*args)`` yields ``(sign, g, source_args)`` meaning
    ``sign * (g . c(source_args))``; ``g`` indexes the module's group
    (``acting`` may translate it first, e.g. a projection to pi_0).
    """
    module = src.module
    r = src.r
    triv = module.is_trivial_action
    rows = []
    for args in tgt.tuples():
        acc = [{} for _ in range(r)]
        for sign, g, sargs in terms(*args):
            base = src.index(sargs) * r
            if acting is not None:
                g = acting[g]
            if triv or g == 0:
                for j in range(r):
                    a = acc[j]
                    a[base + j] = a.get(base + j, 0) + sign
            else:
                mat = module.action[g]
                for j in range(r):
                    a = acc[j]
                    row = mat[j]
                    for j2 in range(r):
                        if row[j2]:
                            a[base + j2] = a.get(base + j2, 0) + sign * row[j2]
        rows.extend(acc)
    return AbHom(src.group, tgt.group, rows)


class Cohomology:
    """``Z = ker d_out``, ``B = im d_in`` and ``H = Z / B`` inside one cochain space."""

    def __init__(self, space, d_out=None, d_in=None, degree=None):
        self.space = space
        self.degree = degree
        A = space.group
        full = Subgroup.full(A)
        self.d_out = d_out
        self.d_in = d_in
        self.cocycle_subgroup = kernel_on_subgroup(d_out, d_out.target, full) if d_out is not None else full
        if d_in is not None:
            gens = [d_in.column(j) for j in range(d_in.source.ngens)]
            self.coboundary_subgroup = Subgroup(A, gens)
        else:
            self.coboundary_subgroup = Subgroup.trivial(A)
        zero = Subgroup.trivial(A)
        self._h = Subquotient(self.cocycle_subgroup, self.coboundary_subgroup)
        self._z = Subquotient(self.cocycle_subgroup, zero)
        self._b = Subquotient(self.coboundary_subgroup, zero)

    @property
    def H(self):
        return self._h.group

    @property
    def Z(self):
        return self._z.group

    @property
    def B(self):
        return self._b.group

    @property
    def h_subquotient(self):
        return self._h

    @property
    def z_subquotient(self):
        return self._z

    def is_cocycle(self, vec):
        return self.cocycle_subgroup.contains(vec)

    def is_coboundary(self, vec):
        return self.coboundary_subgroup.contains(vec)

    def classify(self, vec):
        """Class of a cocycle in ``H``."""
        return self._h.encode(vec)

    def representative(self, coords):
        return self._h.lift(coords)

    def cocycle_generators(self):
        return self._z.generators()

    def coboundary_generators(self):
        return self._b.generators()

    def __iter__(self):
        return iter((self.Z, self.B, self.H))

    def __repr__(self):
        return f"Cohomology(degree={self.degree}, H={self.H})"
