"""
[CC-T006] tests.unit.test_cli
Typer CLI 명령, 출력 형식, 종료 코드 테스트

version: 1.1.0
created: 2026-10-17
"""

import json

import pytest
from typer.testing import CliRunner

from cartancount import __version__
from cartancount.cli.main import app
from cartancount.matrices.textio import parse_matrix
from cartancount.permutations.reduced import reduced_matrix
from cartancount.permutations.textio import parse_permutation

runner = CliRunner()


def _run(*args: str):
    return runner.invoke(app, list(args))


class TestCount:  # [CC-T006.1]
    def test_text(self):
        result = _run("count", "--m", "2", "--n", "2", "--o", "1")
        assert result.exit_code == 0
        assert result.stdout == "2\n"

    @pytest.mark.parametrize(
        ("m", "n", "o", "expected"),
        [("1", "7", "1", "1"), ("2", "5", "1", "3"), ("2", "2", "2", "5")],
    )
    def test_known_counts(self, m, n, o, expected):
        result = _run("count", "--m", m, "--n", n, "--o", o)
        assert result.exit_code == 0
        assert result.stdout.strip() == expected

    def test_no_transpose(self):
        result = _run("count", "--m", "2", "--n", "2", "--o", "1", "--no-transpose")
        assert result.stdout == "2\n"

    def test_json(self):
        result = _run("count", "--m", "2", "--n", "2", "--o", "1", "--output", "json")
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["class_count"] == 2
        assert data["oracle_count"] == 2
        assert len(data["classes"]) == 2

    def test_csv(self):
        result = _run("count", "--m", "2", "--n", "2", "--o", "1", "--output", "csv")
        assert result.stdout.splitlines() == [
            "m,n,o,count,oracle,formula_name,expected,status",
            "2,2,1,2,2,floor_half_n_plus_one,2,PASS",
        ]

    def test_deterministic(self):
        args = ("count", "--m", "2", "--n", "2", "--o", "2", "--output", "json")
        assert _run(*args).stdout == _run(*args).stdout

    def test_usage_error(self):
        result = _run("count", "--m", "0", "--n", "2", "--o", "1")
        assert result.exit_code == 2

    def test_guard_refusal(self):
        result = _run("count", "--m", "2", "--n", "17", "--o", "1")
        assert result.exit_code == 1
        assert "max_row_sum" in result.output


class TestClasses:  # [CC-T006.2]
    def test_text(self):
        result = _run("classes", "--m", "2", "--n", "2", "--o", "1")
        assert result.exit_code == 0
        assert result.stdout == "2 2\n0 2\n2 0\n\n2 2\n1 1\n1 1\n"

    def test_witness(self):
        result = _run("classes", "--m", "2", "--n", "2", "--o", "2", "--witness")
        assert result.exit_code == 0
        blocks = result.stdout.split("\n\n")
        assert len(blocks) == 5
        for block in blocks:
            lines = block.strip().splitlines()
            matrix = parse_matrix("\n".join(lines[:5]))
            sigma = parse_permutation("\n".join(lines[5:]))
            assert reduced_matrix(sigma) == matrix

    def test_json_witness(self):
        result = _run(
            "classes", "--m", "2", "--n", "2", "--o", "1", "--output", "json", "--witness"
        )
        data = json.loads(result.stdout)
        assert [sorted(c["witness"]) for c in data["classes"]] == [[1, 2, 3, 4]] * 2

    def test_csv(self):
        result = _run("classes", "--m", "2", "--n", "2", "--o", "1", "--output", "csv")
        assert result.stdout.splitlines() == [
            "index,rows,cols,entries",
            "1,2,2,0 2 2 0",
            "2,2,2,1 1 1 1",
        ]


class TestSpectra:  # [CC-T006.3]
    def test_csv(self):
        result = _run("spectra", "--m", "2", "--n", "2", "--o", "2", "--output", "csv")
        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "circles,core_vertices,core_edges,classes",
            "1,0,0,1",
            "2,0,0,2",
            "3,0,0,1",
            "4,0,0,1",
        ]

    def test_text_summary(self):
        result = _run("spectra", "--m", "2", "--n", "2", "--o", "2")
        assert result.exit_code == 0
        assert "types=4 classes=5" in result.stdout

    def test_json(self):
        result = _run("spectra", "--m", "2", "--n", "3", "--o", "1", "--output", "json")
        data = json.loads(result.stdout)
        assert len(data) == 2
        assert all(len(group["classes"]) == 1 for group in data)


class TestOracle:  # [CC-T006.4]
    def test_text(self):
        result = _run("oracle", "--m", "2", "--n", "2", "--o", "1")
        assert result.exit_code == 0
        assert result.stdout == "without_flip 2\nwith_flip 2\ncosets 3\n"

    def test_rectangular_has_no_flip(self):
        result = _run("oracle", "--m", "2", "--n", "3", "--o", "1")
        assert "with_flip -" in result.stdout

    def test_csv(self):
        result = _run("oracle", "--m", "2", "--n", "2", "--o", "1", "--output", "csv")
        assert result.stdout.splitlines() == [
            "m,n,o,without_flip,with_flip,cosets",
            "2,2,1,2,2,3",
        ]

    def test_json(self):
        result = _run("oracle", "--m", "2", "--n", "2", "--o", "1", "--output", "json")
        data = json.loads(result.stdout)
        assert sum(data["sizes"]) == 24

    def test_guard_refusal(self):
        result = _run("oracle", "--m", "2", "--n", "5", "--o", "1")
        assert result.exit_code == 1
        assert "oracle_max_points" in result.output

    def test_yaml_guard(self, tmp_path):
        path = tmp_path / "cartancount.yaml"
        path.write_text("guards:\n  oracle_max_points: 4\n", encoding="utf-8")
        ok = _run("--config", str(path), "oracle", "--m", "2", "--n", "2", "--o", "1")
        refused = _run("--config", str(path), "oracle", "--m", "2", "--n", "3", "--o", "1")
        assert ok.exit_code == 0
        assert refused.exit_code == 1


class TestVerify:  # [CC-T006.5]
    def test_csv(self):
        result = _run("verify", "--max-n", "3", "--max-o", "1", "--output", "csv")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "m,n,o,count,oracle,formula_name,expected,status"
        assert all(line.endswith(",PASS") for line in lines[1:])

    def test_text(self):
        result = _run("verify", "--max-n", "3", "--max-o", "1")
        assert result.exit_code == 0
        assert "FAIL" not in result.stdout
        assert "realized 1:(1,1,1), 2:(2,2,1)" in result.stdout

    def test_json(self):
        result = _run("verify", "--max-n", "2", "--max-o", "1", "--output", "json")
        data = json.loads(result.stdout)
        assert data["max_n"] == 2
        assert {cell["status"] for cell in data["cells"]} == {"PASS"}

    @pytest.mark.slow
    @pytest.mark.timeout(900)
    def test_full_grid(self):
        """기본 검증 격자 (n ≤ 8, o ≤ 3) 의 25칸이 모두 PASS."""
        result = _run("verify", "--max-n", "8", "--max-o", "3", "--output", "csv")
        assert result.exit_code == 0
        rows = result.stdout.splitlines()[1:]
        assert len(rows) == 25
        assert all(row.endswith(",PASS") for row in rows)
        assert "2,2,3,11,,partition_2o,11,PASS" in rows


class TestDot:  # [CC-T006.6]
    def test_writes_files(self, tmp_path):
        result = _run("dot", "--m", "2", "--n", "2", "--o", "1", "--out-path", str(tmp_path))
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["class_001.dot", "class_002.dot"]
        first = (tmp_path / "class_001.dot").read_text(encoding="utf-8")
        assert first.startswith("graph class_001 {\n")
        assert first.count("  r1 -- c2;") == 2

    def test_stdout_without_out_path(self, tmp_path, monkeypatch):
        """--out-path 가 없으면 DOT 본문을 stdout 으로 내보내고 파일은 만들지 않습니다."""
        monkeypatch.chdir(tmp_path)
        result = _run("dot", "--m", "2", "--n", "2", "--o", "1")
        assert result.exit_code == 0
        assert result.stdout.startswith("graph class_001 {\n")
        assert "graph class_002 {" in result.stdout
        assert result.stdout.count("}") == 2
        assert list(tmp_path.iterdir()) == []

    def test_stdout_json(self):
        result = _run("dot", "--m", "2", "--n", "3", "--o", "1", "--output", "json")
        data = json.loads(result.stdout)
        assert data["files"] == []
        assert len(data["dot"]) == len(data["graphs"]) == 2
        assert data["dot"][0].startswith("graph class_001 {")


class TestVersion:  # [CC-T006.7]
    def test_version(self):
        result = _run("--version")
        assert result.exit_code == 0
        assert f"cartancount v{__version__}" in result.stdout
