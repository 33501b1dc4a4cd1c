"""The standard extension of a componentwise pointed 3-cocycle.

Given ``pi_0``, a ``pi_0``-module ``pi_1`` and a cpt 3-cocycle ``z3``, let
``F`` be free on the non-identity elements of ``pi_0`` and ``pi: F -> pi_0``
the canonical map.  The extension has group part ``F`` and module part
``pi_1 x ker(pi)`` with ``mu(k, f) = f``.  A letter ``r`` acts by ``r . k`` on
``pi_1`` and on the free generators ``z2(q, p)`` of ``ker(pi)`` by

    r . (0, z2(q, p)) = (-z3(r, q, p), z2(r, q) z2(rq, p) z2(r, qp)^-1).

Words are tuples of ``(letter, exponent)`` pairs with exponents ``+1``/``-1``.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field

from .bar import bar_space
from .crossed import Cpt3Cocycle

DEFAULT_SEED = 0
DEFAULT_MAX_LENGTH = 8


class MalformedWord(ValueError):
    pass


class NotInKernel(ValueError):
    pass


# ---------------------------------------------------------------------------
# Free group words


def _check(w, order):
    for item in w:
        if len(item) != 2:
            raise MalformedWord(f"malformed letter {item!r}")
        x, e = item
        if e not in (1, -1):
            raise MalformedWord(f"malformed exponent in letter {item!r}")
        if x == 0:
            raise MalformedWord("letter uses the identity of pi_0")
        if order is not None and not 0 < x < order:
            raise MalformedWord(f"letter {x} outside pi_0")


def reduce(w, order=None):
    """Free reduction."""
    _check(w, order)
    out = []
    for x, e in w:
        if out and out[-1][0] == x and out[-1][1] == -e:
            out.pop()
        else:
            out.append((x, e))
    return tuple(out)


def multiply(*words):
    out = []
    for w in words:
        for x, e in w:
            if out and out[-1][0] == x and out[-1][1] == -e:
                out.pop()
            else:
                out.append((x, e))
    return tuple(out)


def invert(w):
    return tuple((x, -e) for x, e in reversed(w))


def pi(group, w):
    p = 0
    for x, e in w:
        p = group.table[p][x if e == 1 else group.inv(x)]
    return p


# ---------------------------------------------------------------------------
# The extension


@dataclass(frozen=True)
class Generator:
    """One factor ``conjugator z2(q, p)^sign conjugator^-1`` of a kernel word."""

    q: int
    p: int
    conjugator: tuple = ()
    sign: int = 1


@dataclass(frozen=True)
class StdElement:
    """Element ``(k, f)`` of ``pi_1 x ker(pi)``."""

    pi1: tuple
    word: tuple


class StandardExtension:
    def __init__(self, z3c: Cpt3Cocycle):
        self.z3 = z3c
        self.pi1_module = z3c.module
        self.pi0 = z3c.group
        self.pi1 = self.pi1_module.coeffs
        self._rules = {}

    # -- sections --------------------------------------------------------

    def s0(self, p):
        return ((p, 1),) if p else ()

    def z2(self, q, p):
        """``s0(q) s0(p) s0(qp)^-1``."""
        return multiply(self.s0(q), self.s0(p), invert(self.s0(self.pi0.table[q][p])))

    def Z2(self, q, p):
        return StdElement(self.pi1.zero(), self.z2(q, p))

    def s1(self, f):
        if pi(self.pi0, f) != 0:
            raise NotInKernel("word is not in the kernel of pi")
        return StdElement(self.pi1.zero(), multiply(f))

    # -- module structure -----------------------------------------------

    def check_word(self, w):
        return reduce(w, self.pi0.order)

    def element(self, k, f):
        f = self.check_word(f)
        if pi(self.pi0, f) != 0:
            raise NotInKernel("word is not in the kernel of pi")
        return StdElement(self.pi1.reduce(k), f)

    def mul(self, a, b):
        return StdElement(self.pi1.add(a.pi1, b.pi1), multiply(a.word, b.word))

    def inv(self, a):
        return StdElement(self.pi1.neg(a.pi1), invert(a.word))

    def prod(self, *xs):
        out = StdElement(self.pi1.zero(), ())
        for x in xs:
            out = self.mul(out, x)
        return out

    def mu(self, a):
        return a.word

    # -- decomposition ---------------------------------------------------

    def schreier_decompose(self, w):
        """Left-to-right rewriting of a kernel word in the generators ``z2(q, x)``.

        A letter ``x`` read at coset ``c`` contributes ``z2(c, x)``; a letter
        ``x^-1`` contributes ``z2(c x^-1, x)^-1``.  Factors at the trivial coset
        are empty words and are skipped.
        """
        w = self.check_word(w)
        P = self.pi0
        c = 0
        out = []
        for x, e in w:
            if e == 1:
                if c:
                    out.append(Generator(c, x, (), 1))
                c = P.table[c][x]
            else:
                c2 = P.table[c][P.inv(x)]
                if c2:
                    out.append(Generator(c2, x, (), -1))
                c = c2
        if c != 0:
            raise NotInKernel("word is not in the kernel of pi")
        return out

    def reassemble(self, gens):
        words = []
        for g in gens:
            z = self.z2(g.q, g.p)
            words.append(multiply(g.conjugator, z if g.sign == 1 else invert(z), invert(g.conjugator)))
        return multiply(*words)

    # -- action ------------------------------------------------------------

    def generator_image(self, r, q, p):
        """``r . (0, z2(q, p))``."""
        key = (r, q, p)
        if key not in self._rules:
            P = self.pi0
            rq, qp = P.table[r][q], P.table[q][p]
            word = multiply(self.z2(r, q), self.z2(rq, p), invert(self.z2(r, qp)))
            self._rules[key] = StdElement(self.pi1.neg(self.z3(r, q, p)), word)
        return self._rules[key]

    def _letter(self, r, a):
        k = self.pi1_module.act(r, a.pi1)
        word = ()
        for g in self.schreier_decompose(a.word):
            img = self.generator_image(r, g.q, g.p)
            if g.sign == 1:
                k = self.pi1.add(k, img.pi1)
                word = multiply(word, img.word)
            else:
                k = self.pi1.sub(k, img.pi1)
                word = multiply(word, invert(img.word))
        return StdElement(k, word)

    def _letter_inverse(self, r, a):
        # solve r . b = a: the kernel part is conjugation, the pi_1 part is affine
        word = multiply(invert(self.s0(r)), a.word, self.s0(r))
        shift = self._letter(r, StdElement(self.pi1.zero(), word)).pi1
        k = self.pi1_module.act(self.pi0.inv(r), self.pi1.sub(a.pi1, shift))
        return StdElement(k, word)

    def act(self, g, a):
        g = self.check_word(g)
        for x, e in reversed(g):
            a = self._letter(x, a) if e == 1 else self._letter_inverse(x, a)
        return a

    # -- recovery of the 3-cocycle ----------------------------------------

    def recover_z3(self):
        """``Z2(r,q) Z2(rq,p) Z2(r,qp)^-1 (s0(r) . Z2(q,p))^-1`` read in ``pi_1``."""
        P = self.pi0
        space = bar_space(P, self.pi1_module, 3)

        def value(r, q, p):
            rq, qp = P.table[r][q], P.table[q][p]
            x = self.prod(
                self.Z2(r, q),
                self.Z2(rq, p),
                self.inv(self.Z2(r, qp)),
                self.inv(self.act(self.s0(r), self.Z2(q, p))),
            )
            if x.word:
                raise AssertionError(f"construction bug: value at {(r, q, p)} has nontrivial kernel part")
            return x.pi1

        rec = Cpt3Cocycle(self.pi1_module, space.from_function(value), check=False)
        return RecoveryResult(rec, rec.vec == self.z3.vec)


def standard_extension(z3c):
    return StandardExtension(z3c)


def std_sections(E):
    P = E.pi0
    s0 = [E.s0(p) for p in range(P.order)]
    z2 = [[E.z2(q, p) for p in range(P.order)] for q in range(P.order)]
    Z2 = [[E.s1(w) for w in row] for row in z2]
    return s0, E.s1, z2, Z2


def schreier_decompose(E, w):
    return E.schreier_decompose(w)


def act(E, g, a):
    return E.act(g, a)


@dataclass
class RecoveryResult:
    z3: Cpt3Cocycle
    equal: bool


def recover_z3(E):
    return E.recover_z3()


# ---------------------------------------------------------------------------
# Randomised axiom check


@dataclass
class SampleReport:
    seed: int
    count: int
    max_length: int
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def resolve_seed(seed=None):
    if seed is not None:
        return int(seed)
    env = os.environ.get("H2_SEED")
    return int(env) if env else DEFAULT_SEED


def _random_word(rng, order, max_length):
    n = rng.randint(0, max_length)
    return multiply(tuple((rng.randrange(1, order), rng.choice((1, -1))) for _ in range(n)))


def _random_element(E, rng, max_length):
    w = _random_word(rng, E.pi0.order, max_length)
    w = multiply(w, invert(E.s0(pi(E.pi0, w))))
    k = tuple(rng.randrange(d) if d else rng.randint(-9, 9) for d in E.pi1.factors)
    return E.element(k, w)


def axiom_sample_check(E, seed=None, count=1000, max_length=DEFAULT_MAX_LENGTH):
    """Equivariance, Peiffer identity, action composition and action by
    homomorphisms on ``count`` random samples."""
    seed = resolve_seed(seed)
    rng = random.Random(seed)
    report = SampleReport(seed, count, max_length)
    order = E.pi0.order
    if order == 1:
        report.checked = count
        return report
    for i in range(count):
        g = _random_word(rng, order, max_length)
        h = _random_word(rng, order, max_length)
        a = _random_element(E, rng, max_length)
        b = _random_element(E, rng, max_length)
        ga = E.act(g, a)
        witness = {"sample": i, "g": g, "h": h, "a": a, "b": b}
        if E.mu(ga) != multiply(g, E.mu(a), invert(g)):
            report.failures.append(("Equi", witness))
        if E.act(E.mu(a), b) != E.prod(a, b, E.inv(a)):
            report.failures.append(("Peif", witness))
        if E.act(multiply(g, h), a) != E.act(g, E.act(h, a)):
            report.failures.append(("composition", witness))
        if E.act(g, E.mul(a, b)) != E.mul(ga, E.act(g, b)):
            report.failures.append(("homomorphism", witness))
        report.checked += 1
    return report
