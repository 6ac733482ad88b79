import json
import random
from fractions import Fraction

import pytest

from helpers import random_sector_form
from sectorforms.fincard import FinMap, GenWord, Generator, factor_map
from sectorforms.jsonio import (
    InputFormatError,
    JsonSyntaxError,
    dumps,
    finmap_from_dict,
    finmap_to_dict,
    genword_from_dict,
    genword_to_dict,
    load_json_file,
    poly_from_dict,
    poly_to_dict,
    polymap_from_dict,
    polymap_to_dict,
    sectorform_from_dict,
    sectorform_to_dict,
)
from sectorforms.poly import Poly, PolyMap

F = Fraction


class TestFinMapJson:
    def test_round_trip(self):
        f = FinMap(3, 2, (2, 1, 1))
        assert finmap_from_dict(finmap_to_dict(f)) == f

    def test_golden_bytes(self):
        f = FinMap(2, 2, (2, 1))
        assert dumps(finmap_to_dict(f)) == (
            '{\n  "dom": 2,\n  "cod": 2,\n  "table": [\n    2,\n    1\n  ]\n}\n')

    def test_bad_payloads(self):
        with pytest.raises(InputFormatError):
            finmap_from_dict({"dom": 2, "cod": 2})
        with pytest.raises(InputFormatError):
            finmap_from_dict({"dom": 2, "cod": 1, "table": [1, 2]})
        with pytest.raises(InputFormatError):
            finmap_from_dict({"dom": True, "cod": 1, "table": [1]})


class TestGenWordJson:
    def test_round_trip(self):
        w = factor_map(FinMap(2, 3, (3, 1)))
        assert genword_from_dict(genword_to_dict(w)) == w

    def test_kind_strings(self):
        w = GenWord(1, 2, (Generator("delta", 1, 1), Generator("sigma", 2, 1)))
        payload = genword_to_dict(w)
        assert [g["kind"] for g in payload["gens"]] == ["delta", "sigma"]

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            genword_from_dict({"dom": 1, "cod": 1,
                               "gens": [{"kind": "zeta", "n": 1, "i": 1}]})

    def test_noncomposable_rejected(self):
        with pytest.raises(InputFormatError):
            genword_from_dict({"dom": 2, "cod": 2,
                               "gens": [{"kind": "epsilon", "n": 1, "i": 1}]})


class TestPolyJson:
    def test_round_trip(self):
        p = Poly(2, {(1, 0): F(-3, 7), (0, 2): F(5)})
        assert poly_from_dict(poly_to_dict(p)) == p

    def test_terms_sorted_and_strings(self):
        p = Poly(1, {(2,): F(1, 3), (0,): F(4)})
        payload = poly_to_dict(p)
        assert payload["terms"][0]["exp"] == [0]
        assert payload["terms"][1] == {"exp": [2], "num": "1", "den": "3"}

    def test_big_integers_survive(self):
        big = 10 ** 40 + 1
        p = Poly(1, {(1,): F(big, 3)})
        assert poly_from_dict(poly_to_dict(p)) == p

    def test_bad_coefficient(self):
        with pytest.raises(InputFormatError):
            poly_from_dict({"vars": 1, "terms": [{"exp": [1], "num": "x", "den": "1"}]})
        with pytest.raises(InputFormatError):
            poly_from_dict({"vars": 1, "terms": [{"exp": [1], "num": "1", "den": "0"}]})


class TestPolyMapAndFormJson:
    def test_polymap_round_trip(self):
        pm = PolyMap(2, 2, (Poly.var(2, 0) * Poly.var(2, 1), Poly.const(2, F(1, 2))))
        assert polymap_from_dict(polymap_to_dict(pm)) == pm

    def test_sector_form_round_trip(self):
        rng = random.Random(3)
        w = random_sector_form(rng, 2, 1, 2)
        assert sectorform_from_dict(sectorform_to_dict(w)) == w

    def test_dimension_check(self):
        payload = {"n": 2, "m": 1, "k": 1,
                   "body": polymap_to_dict(PolyMap(2, 1, (Poly.var(2, 0),)))}
        with pytest.raises(InputFormatError):
            sectorform_from_dict(payload)


class TestFiles:
    def test_load_json_file(self, tmp_path):
        path = tmp_path / "map.json"
        path.write_text('{"dom": 1, "cod": 1, "table": [1]}')
        assert finmap_from_dict(load_json_file(str(path))) == FinMap(1, 1, (1,))

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{nope")
        with pytest.raises(JsonSyntaxError):
            load_json_file(str(path))

    def test_missing_file(self):
        with pytest.raises(InputFormatError):
            load_json_file("/nonexistent/x.json")

    def test_dumps_deterministic(self):
        payload = finmap_to_dict(FinMap(2, 1, (1, 1)))
        assert dumps(payload) == dumps(finmap_to_dict(FinMap(2, 1, (1, 1))))
        assert json.loads(dumps(payload)) == payload
