import os
from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from oracles import permutation_group
from xmodcoh.crossed import CrossedModule, validate_crossed_module
from xmodcoh.groups import cyclic_group, direct_product, group_from_elements
from xmodcoh.modules import GModule, trivial_module

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


C2, C3, C4 = cyclic_group(2), cyclic_group(3), cyclic_group(4)


@lru_cache(maxsize=None)
def s3():
    elems, compose = permutation_group([(1, 0, 2), (1, 2, 0)])
    return group_from_elements(elems, compose, "S3"), elems


def _xm(G, M, mu, action, name):
    return validate_crossed_module(CrossedModule(G, M, mu, action, name))


def inverse_action(G_order, M, parity):
    """Action of ``G`` on an abelian ``M`` by inversion for odd-parity elements."""
    return [[M.inv(m) if parity(g) else m for m in range(M.order)] for g in range(G_order)]


@lru_cache(maxsize=None)
def c4_example():
    """``b -> a^2`` between cyclic groups of order 4, ``a . b = b^-1``."""
    return _xm(C4, C4, [0, 2, 0, 2], inverse_action(4, C4, lambda g: g % 2), "c4_example")


@lru_cache(maxsize=None)
def trivial_mu_c2():
    return _xm(C2, C2, [0, 0], [[0, 1], [0, 1]], "trivial_mu_c2")


@lru_cache(maxsize=None)
def crossed_catalogue():
    S3, elems = s3()
    a3 = [i for i, p in enumerate(elems) if _even(p)]
    A3 = cyclic_group(3)
    # map A3 = C3 onto the rotations of S3
    rot = [i for i, p in enumerate(elems) if p == (1, 2, 0)][0]
    powers = [0, rot, S3.mul(rot, rot)]
    assert sorted(powers) == sorted(a3)
    a3_action = [[powers.index(S3.conj(g, powers[m])) for m in range(3)] for g in range(S3.order)]
    K = direct_product(C2, C2)
    return {
        "c4_example": c4_example(),
        "trivial_mu_c2": trivial_mu_c2(),
        "identity_c2": _xm(C2, C2, [0, 1], [[0, 1], [0, 1]], "identity_c2"),
        "inclusion_c2_c4": _xm(C4, C2, [0, 2], [[0, 1]] * 4, "inclusion_c2_c4"),
        "projection_c4_c2": _xm(C2, C4, [0, 1, 0, 1], [[0, 1, 2, 3]] * 2, "projection_c4_c2"),
        "a3_in_s3": _xm(S3, A3, powers, a3_action, "a3_in_s3"),
        "sign_c3_over_c2": _xm(C2, C3, [0, 0, 0], inverse_action(2, C3, lambda g: g), "sign_c3_over_c2"),
        "sign_c4_over_c2": _xm(C2, C4, [0, 0, 0, 0], inverse_action(2, C4, lambda g: g), "sign_c4_over_c2"),
        "klein_to_c2": _xm(C2, K, [0, 0, 1, 1], [list(range(4))] * 2, "klein_to_c2"),
    }


def _even(p):
    inv = sum(1 for i in range(len(p)) for j in range(i) if p[j] > p[i])
    return inv % 2 == 0


def coefficient_catalogue(pi0):
    """Small coefficient modules over ``pi0``."""
    out = {
        "Z/2": trivial_module(pi0, [2]),
        "Z/3": trivial_module(pi0, [3]),
        "Z/4": trivial_module(pi0, [4]),
        "Z": trivial_module(pi0, [0]),
    }
    if pi0.order == 2:
        out["Z/4 sign"] = GModule(pi0, trivial_module(pi0, [4]).coeffs, [[[1]], [[-1]]])
        out["Z sign"] = GModule(pi0, trivial_module(pi0, [0]).coeffs, [[[1]], [[-1]]])
        out["Z/2+Z/2 swap"] = GModule(pi0, trivial_module(pi0, [2, 2]).coeffs, [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
    return out


@pytest.fixture(scope="session")
def catalogue():
    return crossed_catalogue()


# ---------------------------------------------------------------------------
# Acceptance summary: one line per criterion after the run

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    number, title = marker.args
    _, ok = _ACCEPTANCE.get(number, (title, True))
    _ACCEPTANCE[number] = (title, ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
