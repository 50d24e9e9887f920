import json

import pytest

from conftest import algebra, groupoid, hpar, ok
from whapar.errors import InputError
from whapar.io import (FIXTURES, dump_action, dump_algebra, dump_groupoid, dump_hpar, dump_parrep, load,
                       parse_algebra, parse_groupoid)
from whapar.partial import check_partial_action, check_partial_rep
from whapar.wha import check_weak_hopf

ALL_FIXTURES = sorted(p.name for p in FIXTURES.glob("*.json"))


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj) if not isinstance(obj, str) else obj)
    return p


@pytest.mark.parametrize("name", ALL_FIXTURES)
def test_every_fixture_loads(name):
    loaded = load(name)
    assert loaded.kind in ("algebra", "groupoid", "action", "parrep")
    assert len(loaded.digest) == 64


@pytest.mark.parametrize("name", ["trivial", "Z3", "discrete2", "pair2"])
def test_groupoid_roundtrip(name, tmp_path):
    d = dump_groupoid(groupoid(name))
    g = parse_groupoid(d)
    assert g.arrows == groupoid(name).arrows and g.compose == groupoid(name).compose
    loaded = load(write(tmp_path, "g.json", d))
    assert loaded.groupoid is not None and loaded.hopf.dim == len(g.arrows)


@pytest.mark.parametrize("name", ["Z2", "pair2", "sweedler"])
def test_algebra_roundtrip(name, tmp_path):
    h = algebra(name)
    h2 = parse_algebra(dump_algebra(h))
    assert h2.alg.table() == h.alg.table()
    assert h2.coalg.comult == h.coalg.comult
    assert h2.antipode == h.antipode
    ok(check_weak_hopf(h2))
    assert load(write(tmp_path, "a.json", dump_algebra(h))).hopf.dim == h.dim


def test_action_and_parrep_roundtrip(tmp_path):
    pa = load("sweedler_q.action.json").obj
    d = dump_action(pa, "sweedler_pair.json")
    pa2 = load(write(tmp_path, "x.action.json", d)).obj
    assert pa2.table() == pa.table()
    ok(check_partial_action(pa2))
    pr = load("z2_partial.parrep.json").obj
    pr2 = load(write(tmp_path, "p.json", dump_parrep(pr, "z2.json"))).obj
    assert pr2.images == pr.images
    ok(check_partial_rep(pr2))


def test_hpar_export_is_json():
    d = dump_hpar(hpar("Z2"))
    assert d["format"] == "whapar-hpar/1"
    json.dumps(d)


def test_relative_references_resolve(tmp_path):
    write(tmp_path, "mine.json", dump_algebra(algebra("Z2")))
    act = {"format": "whapar-action/1", "hopf": "mine.json",
           "module_algebra": {"dim": 1, "mult": [[0, 0, 0, "1"]], "unit": [[0, "1"]]},
           "act": [[0, 0, 0, "1"], [1, 0, 0, "1"]]}
    pa = load(write(tmp_path, "act.json", act)).obj
    ok(check_partial_action(pa))


@pytest.mark.parametrize("text, fragment", [
    ("{", "1:2"),
    ('{"format": "nope/1"}', "format"),
    ('{"format": "whapar-algebra/1", "labels": ["a"]}', "missing field"),
    ('{"format": "whapar-groupoid/1", "objects": ["o"], "arrows": [{"label": "i", "source": "o", '
     '"target": "o"}], "identities": {"o": "i"}, "compose": []}', "no inverse"),
])
def test_malformed_inputs(tmp_path, text, fragment):
    with pytest.raises(InputError, match=fragment):
        load(write(tmp_path, "bad.json", text))


def test_float_coefficients_rejected(tmp_path):
    d = dump_algebra(algebra("Z2"))
    d["counit"][0] = 1.0
    with pytest.raises(InputError):
        load(write(tmp_path, "f.json", d))


def test_index_out_of_range(tmp_path):
    d = dump_algebra(algebra("Z2"))
    d["mult"].append([5, 0, 0, "1"])
    with pytest.raises(InputError, match="out of range"):
        load(write(tmp_path, "r.json", d))


def test_missing_file():
    with pytest.raises(InputError, match="no such file"):
        load("does-not-exist.json")
