"""
English:
Tests for spbw/core/artifacts.py
Validates directory creation, run_id generation and the saved report and
meta files.

Português:
Testes para spbw/core/artifacts.py
Valida criação de diretórios, geração de run_id e os arquivos de relatório
e meta gravados.
"""

import json

import pytest
from pathlib import Path

from spbw.core.artifacts import create_run_dirs, generate_run_id, write_meta, write_report


class TestGenerateRunId:
    """PT: Testes para generate_run_id()"""
    """EN: Tests for generate_run_id()"""

    def test_run_id_format(self):
        """PT: Run ID deve ter formato YYYYMMDD_HHMMSS_XXXXXX"""
        """EN: Run ID must have format YYYYMMDD_HHMMSS_XXXXXX"""
        run_id = generate_run_id()

        parts = run_id.split("_")
        assert len(parts) == 3, "Run ID must have 3 parts separated by _"
        assert len(parts[0]) == 8, "Date must have 8 characters (YYYYMMDD)"
        assert len(parts[1]) == 6, "Time must have 6 characters (HHMMSS)"
        assert len(parts[2]) == 6, "Suffix must have 6 characters"

    def test_run_id_unique(self):
        """PT: IDs gerados em sequência devem ser únicos"""
        """EN: Run IDs generated in sequence must be unique"""
        ids = [generate_run_id() for _ in range(10)]
        assert len(set(ids)) == 10, "All IDs must be unique"


class TestCreateRunDirs:
    """PT: Testes para create_run_dirs()"""
    """EN: Tests for create_run_dirs()"""

    def test_creates_all_directories(self, temp_artifacts_dir):
        """PT: Deve criar run/, logs/ e reports/"""
        """EN: Must create run/, logs/ and reports/"""
        dirs = create_run_dirs(str(temp_artifacts_dir), "20260117_120000_test")

        assert set(dirs) == {"run", "logs", "reports"}
        for key, path in dirs.items():
            assert path.is_dir(), f"{key} must be a directory"

    def test_directories_structure(self, temp_artifacts_dir):
        dirs = create_run_dirs(temp_artifacts_dir, "20260117_120000_test")
        assert dirs["run"] == Path(temp_artifacts_dir) / "runs" / "20260117_120000_test"
        assert dirs["logs"].parent == dirs["run"]
        assert dirs["reports"].parent == dirs["run"]

    def test_existing_directories_are_reused(self, temp_artifacts_dir):
        first = create_run_dirs(temp_artifacts_dir, "same")
        second = create_run_dirs(temp_artifacts_dir, "same")
        assert first == second


class TestWriters:
    """PT: Testes para write_report() e write_meta()"""
    """EN: Tests for write_report() and write_meta()"""

    def test_report_bytes(self, temp_run_dirs):
        """PT: O arquivo guarda exatamente o texto do relatório"""
        """EN: The file holds exactly the report text"""
        text = "# spbw-report v1\nh = 0\nstatus: ok\n"
        path = write_report(temp_run_dirs, "diffusion_divide", text)
        assert path == temp_run_dirs["reports"] / "diffusion_divide.txt"
        assert path.read_bytes() == text.encode("utf-8")

    def test_report_name_is_sanitized(self, temp_run_dirs):
        path = write_report(temp_run_dirs, "a b/c", "x\n")
        assert path.name == "a_b_c.txt"

    @pytest.mark.parametrize("name", ["", "///"])
    def test_empty_report_name(self, temp_run_dirs, name):
        assert write_report(temp_run_dirs, name, "x\n").name == "report.txt"

    def test_meta(self, temp_run_dirs):
        path = write_meta(temp_run_dirs, {"run_id": "r1", "exit_code": 0, "file": Path("corpus/qx.spbw")})
        assert path == temp_run_dirs["run"] / "meta.json"
        with open(path, encoding="utf-8") as f:
            meta = json.load(f)
        assert meta == {"run_id": "r1", "exit_code": 0, "file": str(Path("corpus/qx.spbw"))}
