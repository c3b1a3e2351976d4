"""Cache round trips, integrity rejection, CLI surface and JSON schemas."""

import json
from importlib import resources

import jsonschema
import pytest

from trunksym.partitions import Partition
from trunksym.fock import decomposition_matrix
from trunksym.cache import (
    CacheIntegrityError,
    cache_get,
    cache_path,
    cache_put,
    canonical_json,
    load_or_compute,
    matrix_payload,
)
from trunksym.classify import is_m_special
from trunksym.suites import run_suite
from trunksym.cli import main

P = Partition


def load_schema(name):
    with resources.files("trunksym.schemas").joinpath(name).open() as fh:
        return json.load(fh)


class TestCache:
    def test_round_trip(self, tmp_path):
        mat = decomposition_matrix(4, 2)
        cache_put(tmp_path, mat)
        assert cache_get(tmp_path, 2, 4) == mat

    def test_cold_get(self, tmp_path):
        assert cache_get(tmp_path, 2, 4) is None

    def test_byte_stability(self, tmp_path):
        mat = decomposition_matrix(5, 3)
        path = cache_put(tmp_path, mat)
        first = path.read_bytes()
        cache_put(tmp_path, mat)
        assert path.read_bytes() == first

    def test_tampered_value_rejected(self, tmp_path):
        mat = decomposition_matrix(3, 3)
        path = cache_put(tmp_path, mat)
        data = path.read_bytes().replace(b"[1,0,1]", b"[1,0,2]")
        assert data != path.read_bytes()
        path.write_bytes(data)
        with pytest.raises(CacheIntegrityError, match="cache integrity"):
            cache_get(tmp_path, 3, 3)

    def test_version_mismatch_rejected(self, tmp_path):
        mat = decomposition_matrix(2, 2)
        path = cache_put(tmp_path, mat)
        payload = json.loads(path.read_text())
        payload["generator"] = "llt-v0"
        path.write_text(canonical_json(payload))
        with pytest.raises(CacheIntegrityError):
            cache_get(tmp_path, 2, 2)

    def test_truncated_file_rejected(self, tmp_path):
        mat = decomposition_matrix(2, 2)
        path = cache_put(tmp_path, mat)
        path.write_text(path.read_text()[:-10])
        with pytest.raises(CacheIntegrityError):
            cache_get(tmp_path, 2, 2)

    def test_load_or_compute_recovers(self, tmp_path, capsys):
        mat = decomposition_matrix(3, 2)
        path = cache_put(tmp_path, mat)
        path.write_text("garbage")
        out = load_or_compute(2, 3, cache_dir=tmp_path)
        assert out == mat
        assert "cache integrity" in capsys.readouterr().err
        # the bad file was replaced by a good one
        assert cache_get(tmp_path, 2, 3) == mat

    def test_matches_schema(self, tmp_path):
        schema = load_schema("matrix-cache.schema.json")
        payload = matrix_payload(decomposition_matrix(4, 3))
        jsonschema.validate(payload, schema)

    def test_path_layout(self, tmp_path):
        assert cache_path(tmp_path, 3, 7).name == "decomp-l3-r7.json"

    def test_env_var_default_dir(self, tmp_path, monkeypatch):
        monkeypatch.setenv("TRUNKSYM_CACHE_DIR", str(tmp_path))
        load_or_compute(2, 3)
        assert cache_path(tmp_path, 2, 3).exists()


class TestReports:
    def test_report_schema_and_determinism(self, tmp_path):
        schema = load_schema("suite-report.schema.json")
        first = run_suite("core-residues", max_degree=4).to_json()
        second = run_suite("core-residues", max_degree=4).to_json()
        jsonschema.validate(first, schema)
        first.pop("elapsed_seconds")
        second.pop("elapsed_seconds")
        assert first == second

    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("does-not-exist")

    def test_unknown_parameter(self):
        with pytest.raises(ValueError, match="does not accept"):
            run_suite("core-residues", max_m=3)

    def test_failure_objects_round_trip(self):
        report = run_suite("core-residues", max_degree=3)
        assert report.ok and report.checked > 0
        payload = report.to_json()
        assert payload["failures"] == []


class TestSpecialVerdictSchema:
    def test_verdicts_validate(self):
        schema = load_schema("special-verdict.schema.json")
        for lam, m, l in ((P((4, 2)), 2, 3), (P((5, 1)), 1, 3), (P((2, 2)), 2, 2)):
            jsonschema.validate(is_m_special(lam, m, l).to_json(), schema)


class TestCli:
    def test_info(self, capsys):
        assert main(["info", "4,2", "--l", "3"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["degree"] == 6
        assert payload["mullineux"] == [2, 2, 1, 1]

    def test_mull(self, capsys):
        assert main(["mull", "4,1", "--l", "3"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["mullineux"] == [2, 2, 1]
        assert payload["symbol"] == [[4, 2], [1, 1]]

    def test_mull_rejects_non_regular(self, capsys):
        assert main(["mull", "1,1", "--l", "2"]) == 2
        assert "not l-regular" in capsys.readouterr().err

    def test_core(self, capsys):
        assert main(["core", "3,1", "--l", "2"]) == 0
        assert json.loads(capsys.readouterr().out)["core"] == []

    def test_special_with_witness(self, capsys):
        assert main(["special", "4,2", "--l", "3", "--m", "2", "--witness"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["special"] is True
        assert payload["witness"] == [[1, [2, 2]], [1, [2]]]

    def test_special_without_witness_flag(self, capsys):
        assert main(["special", "4,2", "--l", "3", "--m", "2"]) == 0
        assert json.loads(capsys.readouterr().out)["witness"] is None

    def test_good(self, capsys):
        assert main(["good", "3", "--l", "2", "--m", "2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] == "unknown"

    def test_good_with_oracle(self, capsys, tmp_path):
        assert main(
            ["good", "2,1", "--l", "2", "--m", "1", "--oracle", "--cache", str(tmp_path)]
        ) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["status"] in ("yes", "no")

    def test_enumerate_special(self, capsys):
        assert main(["enumerate-special", "--l", "3", "--m", "1", "--degree", "5"]) == 0
        assert capsys.readouterr().out.strip() == "2,2,1"

    def test_char(self, capsys):
        assert main(["char", "--m", "2", "--n", "2", "--l", "2", "--degree", "2"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert {"partition": [2], "coeff": 1} in payload["schur_expansion"]

    def test_decomp_matrix_with_cache(self, capsys, tmp_path):
        assert main(
            ["decomp-matrix", "--l", "2", "--degree", "2", "--cache", str(tmp_path)]
        ) == 0
        payload = json.loads(capsys.readouterr().out)
        jsonschema.validate(payload, load_schema("matrix-cache.schema.json"))
        assert cache_path(tmp_path, 2, 2).exists()

    def test_decomp_matrix_cap(self, capsys):
        assert main(["decomp-matrix", "--l", "2", "--degree", "11"]) == 2
        assert "cap" in capsys.readouterr().err

    def test_crosscheck_report(self, capsys, tmp_path):
        out_path = tmp_path / "report.json"
        code = main(
            [
                "crosscheck",
                "--suite",
                "core-residues",
                "--max-degree",
                "4",
                "--json",
                str(out_path),
            ]
        )
        assert code == 0
        payload = json.loads(out_path.read_text())
        jsonschema.validate(payload, load_schema("suite-report.schema.json"))
        assert payload["failures"] == []

    def test_crosscheck_unknown_suite_usage_error(self):
        with pytest.raises(SystemExit) as err:
            main(["crosscheck", "--suite", "nope"])
        assert err.value.code == 2

    def test_malformed_partition_is_usage_error(self, capsys):
        assert main(["core", "4, 2", "--l", "2"]) == 2
        assert "malformed" in capsys.readouterr().err

    def test_grid_override(self, capsys):
        code = main(
            ["crosscheck", "--suite", "mullineux-involution", "--l", "2", "--max-degree", "6"]
        )
        assert code == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["params"]["ls"] == [2]
        assert payload["params"]["max_degree"] == 6
