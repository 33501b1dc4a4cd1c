"""Brute-force reference implementations used as test oracles.

Nothing here calls the Smith normal form or the matrix assembly of the
library: cochains are dicts keyed by argument tuples, coboundaries are
evaluated straight from their defining formulas, and abelian invariants are
read off element orders.
"""

from __future__ import annotations

import itertools
from math import gcd, prod


# ---------------------------------------------------------------------------
# Finite abelian groups from element data


def _prime_factors(n):
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def invariants_from_orders(orders):
    """Invariant factors of a finite abelian group given the multiset of element orders."""
    orders = list(orders)
    n = len(orders)
    if n == 1:
        return []
    per_prime = {}
    for p in _prime_factors(n):
        sylow = sum(1 for o in orders if _is_power(o, p))
        counts = []
        j = 0
        while True:
            size = sum(1 for o in orders if (p**j) % o == 0)
            counts.append(size)
            if size == sylow:
                break
            j += 1
        logs = [_log(c, p) for c in counts]
        # number of cyclic p-factors of order >= p^j is logs[j] - logs[j-1]
        at_least = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        exps = []
        for j in range(len(at_least)):
            nxt = at_least[j + 1] if j + 1 < len(at_least) else 0
            exps += [j + 1] * (at_least[j] - nxt)
        per_prime[p] = sorted(exps, reverse=True)
    width = max(len(v) for v in per_prime.values())
    factors = []
    for i in range(width):
        factors.append(prod(p ** e[i] for p, e in per_prime.items() if i < len(e)))
    return sorted(factors)


def _log(c, p):
    k = 0
    while c > 1:
        c //= p
        k += 1
    return k


def element_order(x, factors):
    o = 1
    for v, d in zip(x, factors):
        v %= d
        if v:
            o = o * (d // gcd(v, d)) // gcd(o, d // gcd(v, d))
    return o


def invariants_of_elements(elements, factors):
    return invariants_from_orders(element_order(x, factors) for x in elements)


def span(gens, factors):
    """All elements of the subgroup generated by ``gens`` in ``prod Z/d_i``."""
    zero = tuple(0 for _ in factors)
    seen = {zero}
    frontier = [zero]
    gens = [tuple(g[i] % d for i, d in enumerate(factors)) for g in gens]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = tuple((a + b) % d for a, b, d in zip(x, g, factors))
            if y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def all_vectors(factors):
    return list(itertools.product(*(range(d) for d in factors)))


# ---------------------------------------------------------------------------
# Cochains as dicts

def cochains(domain, coeff_elements):
    """Every map ``domain -> coeff_elements`` as a dict."""
    domain = list(domain)
    for values in itertools.product(coeff_elements, repeat=len(domain)):
        yield dict(zip(domain, values))


def flatten(space, c):
    """Dict cochain to the library's flat vector layout."""
    return space.from_function(lambda *args: c[args])


def unflatten(space, vec):
    return {args: space.value(vec, *args) for args in space.tuples()}


def _add(x, y, factors):
    return tuple((a + b) % d if d else a + b for a, b, d in zip(x, y, factors))


def _neg(x, factors):
    return tuple((-a) % d if d else -a for a, d in zip(x, factors))


def _act(module, g, x):
    m = module.action[g]
    return tuple(
        (sum(c * v for c, v in zip(row, x)) % d) if d else sum(c * v for c, v in zip(row, x))
        for row, d in zip(m, module.coeffs.factors)
    )


def bar_coboundary(G, M, n, c):
    """``dc`` on ``G^{n+1}`` straight from the alternating-sum formula."""
    fs = M.coeffs.factors
    out = {}
    for args in itertools.product(range(G.order), repeat=n + 1):
        acc = c[args[:-1]]
        for k in range(1, n + 1):
            i = n - k
            merged = args[:i] + (G.table[args[i]][args[i + 1]],) + args[i + 2 :]
            term = c[merged]
            acc = _add(acc, term if k % 2 == 0 else _neg(term, fs), fs)
        last = _act(M, args[0], c[args[1:]])
        acc = _add(acc, last if (n + 1) % 2 == 0 else _neg(last, fs), fs)
        out[args] = acc
    return out


def cm_coboundary(V, M, proj, n, c):
    """Coboundary of a crossed-module cochain from the three defining formulas."""
    fs = M.coeffs.factors
    G, Mv, mu = V.group.table, V.module.table, V.mu
    act = V.action
    go, mo = V.group.order, V.module.order
    out = {}
    if n == 0:
        for g in range(go):
            out[(g,)] = _add(c[()], _neg(_act(M, proj[g], c[()]), fs), fs)
    elif n == 1:
        for m, h, g in itertools.product(range(mo), range(go), range(go)):
            v = _add(c[(G[mu[m]][h],)], _neg(c[(G[h][g],)], fs), fs)
            out[(m, h, g)] = _add(v, _act(M, proj[h], c[(g,)]), fs)
    else:
        for p, n_, k, m, h, g in itertools.product(range(mo), range(mo), range(go), range(mo), range(go), range(go)):
            v = c[(p, G[mu[n_]][k], G[mu[m]][h])]
            v = _add(v, _neg(c[(Mv[p][n_], k, G[h][g])], fs), fs)
            v = _add(v, c[(Mv[n_][act[k][m]], G[k][h], g)], fs)
            v = _add(v, _neg(_act(M, proj[k], c[(m, h, g)]), fs), fs)
            out[(p, n_, k, m, h, g)] = v
    return out


def is_zero_cochain(c):
    return all(not any(v) for v in c.values())


def brute_cohomology(domain_prev, domain, coboundary_prev, coboundary, coeff_elements):
    """Exhaustive ``Z`` and ``B`` as sets of frozen cochains (tuples in domain order).

    ``coboundary_prev`` is ``None`` in degree 0, where ``B`` is zero.
    """
    domain = list(domain)
    Z = set()
    for c in cochains(domain, coeff_elements):
        if is_zero_cochain(coboundary(c)):
            Z.add(tuple(c[t] for t in domain))
    if coboundary_prev is None:
        return Z, {tuple(coeff_elements[0] for _ in domain)}
    B = set()
    for c in cochains(domain_prev, coeff_elements):
        dc = coboundary_prev(c)
        B.add(tuple(dc[t] for t in domain))
    return Z, B


# ---------------------------------------------------------------------------
# Groups


def brute_is_group(table):
    n = len(table)
    if any(table[0][x] != x or table[x][0] != x for x in range(n)):
        return False
    if any(0 not in row for row in table):
        return False
    return all(table[table[a][b]][c] == table[a][table[b][c]] for a in range(n) for b in range(n) for c in range(n))


def permutation_group(perms):
    """Closure of a list of permutations (tuples), identity first, as a table."""
    ident = tuple(range(len(perms[0])))
    elems = [ident]
    seen = {ident}
    i = 0
    while i < len(elems):
        for p in perms:
            q = tuple(elems[i][p[k]] for k in range(len(ident)))
            if q not in seen:
                seen.add(q)
                elems.append(q)
        i += 1
    compose = lambda a, b: tuple(a[b[k]] for k in range(len(ident)))  # noqa: E731
    return elems, compose


def _is_power(o, p):
    while o % p == 0:
        o //= p
    return o == 1
