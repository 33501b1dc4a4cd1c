import copy
import json
from pathlib import Path

import jsonschema
import pytest

from xmodcoh.instances import (
    InstanceError,
    bundled_names,
    coefficient_module,
    parse,
    parse_text,
    read_text,
)
from xmodcoh.groups import cyclic_group

SCHEMA = json.loads((Path(__file__).resolve().parents[1] / "docs" / "instance.schema.json").read_text())

BASE = {
    "groups": {"C2": {"cyclic": 2}, "C4": [[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 2]]},
    "modules": {"Zsign": {"group": "C2", "factors": [0], "action": {"1": [[-1]]}}},
    "crossed_modules": {
        "V": {"group": "C4", "module": "C4", "mu": [0, 2, 0, 2], "action": [[0, 1, 2, 3], [0, 3, 2, 1], [0, 1, 2, 3], [0, 3, 2, 1]]}
    },
}


def variant(edit):
    data = copy.deepcopy(BASE)
    edit(data)
    return json.dumps(data)


def error_of(text):
    with pytest.raises(InstanceError) as e:
        parse_text(text)
    return e.value


class TestBundled:
    def test_names(self):
        assert bundled_names() == ["c2_cocycles.json", "c4_example.json", "trivial_mu_example.json", "tsg_examples.json"]

    @pytest.mark.parametrize("name", bundled_names())
    def test_parse_and_schema(self, name):
        text = read_text(f"bundled:{name}")
        jsonschema.validate(json.loads(text), SCHEMA)
        inst = parse(f"bundled:{name}")
        assert inst.source == f"bundled:{name}"

    def test_missing_bundled(self):
        with pytest.raises(InstanceError, match="missing file"):
            read_text("bundled:nope.json")

    def test_missing_file(self, tmp_path):
        with pytest.raises(InstanceError, match="missing file"):
            parse(str(tmp_path / "absent.json"))

    def test_file_on_disk(self, tmp_path):
        p = tmp_path / "v.json"
        p.write_text(json.dumps(BASE))
        inst = parse(str(p))
        assert inst.crossed_modules["V"].mu == (0, 2, 0, 2)
        assert inst.modules["Zsign"].act(1, (5,)) == (-5,)


class TestErrors:
    def test_syntax(self):
        e = error_of('{"groups": {')
        assert e.kind == "syntax error" and e.path.startswith("line 1")

    def test_top_level(self):
        assert error_of("[1]").path == "$"
        assert error_of('{"grops": {}}').path == "$.grops"

    def test_table_shape(self):
        e = error_of(variant(lambda d: d["groups"].update(C4=[[0, 1], [1, 0, 2]])))
        assert e.kind == "shape error" and e.path.startswith("$.groups.C4")

    def test_non_group_table(self):
        e = error_of(variant(lambda d: d["groups"].update(C4=[[0, 1, 2], [1, 1, 0], [2, 0, 1]])))
        assert e.kind == "axiom violation" and e.path == "$.groups.C4"

    def test_dangling_group(self):
        e = error_of(variant(lambda d: d["crossed_modules"]["V"].update(group="C8")))
        assert e.kind == "dangling reference" and e.path == "$.crossed_modules.V.group"

    def test_mu_length(self):
        e = error_of(variant(lambda d: d["crossed_modules"]["V"].update(mu=[0, 2, 0])))
        assert e.kind == "shape error" and e.path == "$.crossed_modules.V.mu"

    def test_mu_out_of_range(self):
        e = error_of(variant(lambda d: d["crossed_modules"]["V"].update(mu=[0, 2, 0, 7])))
        assert e.path == "$.crossed_modules.V.mu[3]"

    def test_crossed_module_axiom(self):
        e = error_of(variant(lambda d: d["crossed_modules"]["V"].update(mu=[0, 1, 2, 3])))
        assert e.kind == "axiom violation" and "Equi" in e.detail

    def test_no_validation(self):
        text = variant(lambda d: d["crossed_modules"]["V"].update(mu=[0, 1, 2, 3]))
        assert parse_text(text, validate=False).crossed_modules["V"].mu == (0, 1, 2, 3)

    def test_module_factor_chain(self):
        e = error_of(variant(lambda d: d["modules"]["Zsign"].update(factors=[2, 3])))
        assert e.path == "$.modules.Zsign.factors"

    def test_module_action_key(self):
        e = error_of(variant(lambda d: d["modules"]["Zsign"].update(action={"x": [[1]]})))
        assert e.path == "$.modules.Zsign.action.x"

    def test_module_action_not_automorphism(self):
        e = error_of(variant(lambda d: d["modules"]["Zsign"].update(action={"1": [[2]]})))
        assert e.kind == "axiom violation"

    def test_missing_key(self):
        e = error_of(variant(lambda d: d["crossed_modules"]["V"].pop("action")))
        assert e.path == "$.crossed_modules.V.action"

    def test_cocycle_shape(self):
        def edit(d):
            d["modules"]["Y"] = {"group": "C2", "factors": [2]}
            d["cocycles3"] = {"z": {"pi0": "C2", "pi1": "Y", "values": [[[0, 0], [0, 0]], [[0, 0], [0]]]}}

        e = error_of(variant(edit))
        assert e.path == "$.cocycles3.z.values[1][1]"

    def test_cocycle_not_a_cocycle(self):
        def edit(d):
            d["modules"]["Y"] = {"group": "C2", "factors": [2]}
            d["cocycles3"] = {"z": {"pi0": "C2", "pi1": "Y", "values": [[[1, 0], [0, 0]], [[0, 0], [0, 0]]]}}

        assert error_of(variant(edit)).kind == "axiom violation"

    def test_cocycle_module_over_other_group(self):
        def edit(d):
            d["modules"]["Y"] = {"group": "C4", "factors": [2]}
            d["cocycles3"] = {"z": {"pi0": "C2", "pi1": "Y", "values": [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]}}

        assert error_of(variant(edit)).path == "$.cocycles3.z.pi1"

    def test_tsg_map_count(self):
        def edit(d):
            d["tsg"] = {"T": {"levels": ["C2", "C2", "C2"], "faces1": [[0, 1]], "faces2": [[0, 1]] * 3, "degen0": [[0, 1]], "degen1": [[0, 1]] * 2}}

        assert error_of(variant(edit)).path == "$.tsg.T.faces1"

    def test_tsg_identity_violation(self):
        def edit(d):
            d["tsg"] = {"T": {"levels": ["C2", "C2", "C2"], "faces1": [[0, 1]] * 2, "faces2": [[0, 1]] * 3, "degen0": [[0, 0]], "degen1": [[0, 1]] * 2}}

        e = error_of(variant(edit))
        assert e.kind == "axiom violation" and "simplicial identity" in e.detail


class TestCoefficients:
    def test_shorthand(self):
        C2 = cyclic_group(2)
        assert coefficient_module("Z/4", C2).coeffs.factors == (4,)
        assert coefficient_module("Z", C2).coeffs.factors == (0,)
        assert coefficient_module("Z / 3", C2).coeffs.factors == (3,)
        assert coefficient_module("Z/1", C2).coeffs.order == 1

    def test_named(self):
        inst = parse_text(json.dumps(BASE))
        M = coefficient_module("Zsign", inst.groups["C2"], inst.modules)
        assert M.act(1, (1,)) == (-1,)

    @pytest.mark.parametrize("coeffs", ["Q", "Z/x", "Z/-2"])
    def test_unknown(self, coeffs):
        with pytest.raises(InstanceError):
            coefficient_module(coeffs, cyclic_group(2))

    def test_wrong_group(self):
        inst = parse_text(json.dumps(BASE))
        with pytest.raises(InstanceError):
            coefficient_module("Zsign", inst.groups["C4"], inst.modules)
