"""JSON instance files.

Top-level keys (all optional):

``groups``
    name -> multiplication table (list of rows), or ``{"cyclic": n}``.
``modules``
    name -> ``{"group": G, "factors": [...], "action": {"g": matrix, ...}}``;
    the action is given on generators of ``G`` and closed under products.
``crossed_modules``
    name -> ``{"group": G, "module": M, "mu": [...], "action": [[...], ...]}``
    where ``module`` names a group and ``action[g][m]`` is ``g . m``.
``tsg``
    name -> ``{"levels": [G0, G1, G2], "faces1": [d0, d1], "faces2": [d0, d1, d2],
    "degen0": [s0], "degen1": [s0, s1]}``.
``cocycles3``
    name -> ``{"pi0": G, "pi1": module over G, "values": table[r][q][p] -> coords}``.

Elements are 0-based indices with 0 the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .abelian import FPAbelianGroup
from .crossed import CrossedModule, Cpt3Cocycle, validate_crossed_module
from .groups import AxiomError, cyclic_group, validate_group
from .modules import GModule, module_from_generators, trivial_module
from .simplicial import TruncatedSimplicialGroup, validate_tsg

BUNDLED_PREFIX = "bundled:"


class InstanceError(ValueError):
    """Malformed instance: syntax, shape or dangling reference at a JSON path."""

    def __init__(self, kind, path, detail):
        self.kind = kind
        self.path = path
        self.detail = detail
        super().__init__(f"{kind} at {path}: {detail}")


@dataclass
class Instance:
    source: str
    groups: dict = field(default_factory=dict)
    modules: dict = field(default_factory=dict)
    crossed_modules: dict = field(default_factory=dict)
    tsg: dict = field(default_factory=dict)
    cocycles3: dict = field(default_factory=dict)
    raw: dict = field(default_factory=dict, repr=False)


def bundled_names():
    return sorted(p.name for p in resources.files("xmodcoh.data").iterdir() if p.name.endswith(".json"))


def read_text(path):
    if path.startswith(BUNDLED_PREFIX):
        name = path[len(BUNDLED_PREFIX) :]
        ref = resources.files("xmodcoh.data").joinpath(name)
        if not ref.is_file():
            raise InstanceError("missing file", "$", f"no bundled instance named {name!r}")
        return ref.read_text(encoding="utf-8")
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InstanceError("missing file", "$", str(e)) from None


def _int_table(obj, path, rows=None, cols=None):
    if not isinstance(obj, list):
        raise InstanceError("shape error", path, "expected a list of rows")
    if rows is not None and len(obj) != rows:
        raise InstanceError("shape error", path, f"expected {rows} rows, got {len(obj)}")
    for i, row in enumerate(obj):
        if not isinstance(row, list):
            raise InstanceError("shape error", f"{path}[{i}]", "expected a list")
        if cols is not None and len(row) != cols:
            raise InstanceError("shape error", f"{path}[{i}]", f"expected {cols} entries, got {len(row)}")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                raise InstanceError("shape error", f"{path}[{i}][{j}]", "expected an integer")
    return obj


def _int_list(obj, path, length=None, bound=None):
    if not isinstance(obj, list):
        raise InstanceError("shape error", path, "expected a list")
    if length is not None and len(obj) != length:
        raise InstanceError("shape error", path, f"expected {length} entries, got {len(obj)}")
    for i, x in enumerate(obj):
        if not isinstance(x, int) or isinstance(x, bool):
            raise InstanceError("shape error", f"{path}[{i}]", "expected an integer")
        if bound is not None and not 0 <= x < bound:
            raise InstanceError("shape error", f"{path}[{i}]", f"index {x} out of range 0..{bound - 1}")
    return obj


def _ref(table, name, path, kind):
    if not isinstance(name, str) or name not in table:
        raise InstanceError("dangling reference", path, f"unknown {kind} {name!r}")
    return table[name]


def _section(data, key):
    sec = data.get(key, {})
    if not isinstance(sec, dict):
        raise InstanceError("shape error", f"$.{key}", "expected an object")
    return sec


def _axiom(path, e):
    return InstanceError("axiom violation", path, str(e))


def parse_group(obj, path, name):
    if isinstance(obj, dict):
        if set(obj) != {"cyclic"} or not isinstance(obj["cyclic"], int) or obj["cyclic"] < 1:
            raise InstanceError("shape error", path, 'expected a table or {"cyclic": n}')
        return cyclic_group(obj["cyclic"], name)
    tab = _int_table(obj, path)
    n = len(tab)
    _int_table(tab, path, n, n)
    for i, row in enumerate(tab):
        _int_list(row, f"{path}[{i}]", n, n)
    try:
        return validate_group(tab, name)
    except AxiomError as e:
        raise _axiom(path, e) from None


def parse_module(obj, path, groups):
    if not isinstance(obj, dict):
        raise InstanceError("shape error", path, "expected an object")
    for key in ("group", "factors"):
        if key not in obj:
            raise InstanceError("shape error", f"{path}.{key}", "missing key")
    G = _ref(groups, obj["group"], f"{path}.group", "group")
    factors = _int_list(obj["factors"], f"{path}.factors")
    if any(f < 0 or f == 1 for f in factors):
        raise InstanceError("shape error", f"{path}.factors", "factors must be 0 (for Z) or at least 2")
    try:
        coeffs = FPAbelianGroup(factors)
    except ValueError:
        raise InstanceError("shape error", f"{path}.factors", "factors must form a divisibility chain") from None
    r = len(factors)
    action = obj.get("action", {})
    if not isinstance(action, dict):
        raise InstanceError("shape error", f"{path}.action", "expected an object keyed by group elements")
    gens = {}
    for key, mat in action.items():
        p = f"{path}.action.{key}"
        try:
            g = int(key)
        except ValueError:
            raise InstanceError("shape error", p, "keys must be element indices") from None
        if not 0 <= g < G.order:
            raise InstanceError("shape error", p, f"element {g} out of range")
        gens[g] = _int_table(mat, p, r, r)
    try:
        if not gens:
            return GModule(G, coeffs, None)
        return module_from_generators(G, coeffs, gens)
    except AxiomError as e:
        raise _axiom(path, e) from None


def parse_crossed_module(obj, path, groups, name=None, validate=True):
    if not isinstance(obj, dict):
        raise InstanceError("shape error", path, "expected an object")
    for key in ("group", "module", "mu", "action"):
        if key not in obj:
            raise InstanceError("shape error", f"{path}.{key}", "missing key")
    G = _ref(groups, obj["group"], f"{path}.group", "group")
    M = _ref(groups, obj["module"], f"{path}.module", "group")
    mu = _int_list(obj["mu"], f"{path}.mu", M.order, G.order)
    act = _int_table(obj["action"], f"{path}.action", G.order, M.order)
    for i, row in enumerate(act):
        _int_list(row, f"{path}.action[{i}]", M.order, M.order)
    V = CrossedModule(G, M, mu, act, name)
    if validate:
        try:
            validate_crossed_module(V)
        except AxiomError as e:
            raise _axiom(path, e) from None
    return V


def parse_tsg(obj, path, groups, name=None, validate=True):
    if not isinstance(obj, dict):
        raise InstanceError("shape error", path, "expected an object")
    for key in ("levels", "faces1", "faces2", "degen0", "degen1"):
        if key not in obj:
            raise InstanceError("shape error", f"{path}.{key}", "missing key")
    lv = obj["levels"]
    if not isinstance(lv, list) or len(lv) != 3:
        raise InstanceError("shape error", f"{path}.levels", "expected three group names")
    G0, G1, G2 = (_ref(groups, n, f"{path}.levels[{i}]", "group") for i, n in enumerate(lv))

    def maps(key, count, src, tgt):
        m = obj[key]
        if not isinstance(m, list) or len(m) != count:
            raise InstanceError("shape error", f"{path}.{key}", f"expected {count} maps")
        return tuple(_int_list(f, f"{path}.{key}[{i}]", src.order, tgt.order) for i, f in enumerate(m))

    G = TruncatedSimplicialGroup(
        G0, G1, G2, maps("faces1", 2, G1, G0), maps("faces2", 3, G2, G1), maps("degen0", 1, G0, G1), maps("degen1", 2, G1, G2), name
    )
    if validate:
        try:
            validate_tsg(G)
        except AxiomError as e:
            raise _axiom(path, e) from None
    return G


def parse_cocycle3(obj, path, groups, modules, validate=True):
    if not isinstance(obj, dict):
        raise InstanceError("shape error", path, "expected an object")
    for key in ("pi0", "pi1", "values"):
        if key not in obj:
            raise InstanceError("shape error", f"{path}.{key}", "missing key")
    P = _ref(groups, obj["pi0"], f"{path}.pi0", "group")
    A = _ref(modules, obj["pi1"], f"{path}.pi1", "module")
    if A.group.table != P.table:
        raise InstanceError("dangling reference", f"{path}.pi1", "module acts through a different group than pi0")
    n, r = P.order, A.coeffs.ngens
    vals = obj["values"]
    vec = []
    if not isinstance(vals, list) or len(vals) != n:
        raise InstanceError("shape error", f"{path}.values", f"expected {n} entries")
    for a, plane in enumerate(vals):
        if not isinstance(plane, list) or len(plane) != n:
            raise InstanceError("shape error", f"{path}.values[{a}]", f"expected {n} entries")
        for b, row in enumerate(plane):
            if not isinstance(row, list) or len(row) != n:
                raise InstanceError("shape error", f"{path}.values[{a}][{b}]", f"expected {n} entries")
            for c, v in enumerate(row):
                p = f"{path}.values[{a}][{b}][{c}]"
                if isinstance(v, int):
                    v = [v]
                _int_list(v, p, r)
                vec.extend(v)
    try:
        return Cpt3Cocycle(A, vec, check=validate)
    except AxiomError as e:
        raise _axiom(path, e) from None


def parse_text(text, source="<string>", validate=True):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceError("syntax error", f"line {e.lineno} column {e.colno}", e.msg) from None
    if not isinstance(data, dict):
        raise InstanceError("shape error", "$", "top level must be an object")
    known = {"groups", "modules", "crossed_modules", "tsg", "cocycles3", "description"}
    for key in data:
        if key not in known:
            raise InstanceError("shape error", f"$.{key}", "unknown top-level key")
    inst = Instance(source, raw=data)
    for name, obj in _section(data, "groups").items():
        inst.groups[name] = parse_group(obj, f"$.groups.{name}", name)
    for name, obj in _section(data, "modules").items():
        m = parse_module(obj, f"$.modules.{name}", inst.groups)
        m.name = name
        inst.modules[name] = m
    for name, obj in _section(data, "crossed_modules").items():
        inst.crossed_modules[name] = parse_crossed_module(obj, f"$.crossed_modules.{name}", inst.groups, name, validate)
    for name, obj in _section(data, "tsg").items():
        inst.tsg[name] = parse_tsg(obj, f"$.tsg.{name}", inst.groups, name, validate)
    for name, obj in _section(data, "cocycles3").items():
        inst.cocycles3[name] = parse_cocycle3(obj, f"$.cocycles3.{name}", inst.groups, inst.modules, validate)
    return inst


def parse(path, validate=True):
    return parse_text(read_text(path), path, validate)


def coefficient_module(text, group, modules=None):
    """A named module, or the trivial module ``Z/n`` / ``Z`` written as a shorthand."""
    modules = modules or {}
    if text in modules:
        M = modules[text]
        if M.group.table != group.table:
            raise InstanceError("dangling reference", "--coeffs", f"module {text!r} is not a module over pi_0")
        return M
    s = text.replace(" ", "")
    if s == "Z":
        return trivial_module(group, [0], "Z")
    if s.startswith("Z/"):
        try:
            n = int(s[2:])
        except ValueError:
            n = -1
        if n >= 0:
            if n == 1:
                return trivial_module(group, [], "0")
            return trivial_module(group, [n], s)
    raise InstanceError("dangling reference", "--coeffs", f"unknown module {text!r}")

