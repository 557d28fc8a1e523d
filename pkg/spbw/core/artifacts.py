"""
Run folders for saved engine sessions (--save).
Pastas de execucao para sessoes salvas do motor (--save).
"""

import json
import secrets
from datetime import datetime
from pathlib import Path
from typing import Any, Dict


def generate_run_id() -> str:
    """
    Run identifier `YYYYMMDD_HHMMSS_<6hex>`, sortable by start time.
    Identificador `YYYYMMDD_HHMMSS_<6hex>`, ordenavel pelo inicio.
    """
    stamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    return f"{stamp}_{secrets.token_hex(3)}"


def create_run_dirs(artifacts_dir: Path | str, run_id: str) -> Dict[str, Path]:
    """
    Lays out `<artifacts_dir>/runs/<run_id>/` with `logs/` (session.log)
    and `reports/` (one text file per saved report).

    Returns the folders keyed by "run", "logs" and "reports".
    Retorna as pastas pelas chaves "run", "logs" e "reports".
    """
    root = Path(artifacts_dir) / "runs" / run_id
    dirs = {"run": root, "logs": root / "logs", "reports": root / "reports"}
    for folder in dirs.values():
        folder.mkdir(parents=True, exist_ok=True)
    return dirs


def write_report(dirs: Dict[str, Path], name: str, text: str) -> Path:
    """
    Saves a report under reports/<name>.txt.
    Salva um relatorio em reports/<name>.txt.
    """
    safe = "".join(c if c.isalnum() or c in "-_." else "_" for c in name).strip("_") or "report"
    path = dirs["reports"] / f"{safe}.txt"
    # byte-identical to stdout
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    return path


def write_meta(dirs: Dict[str, Path], meta: Dict[str, Any]) -> Path:
    """Saves meta.json at the run root."""
    path = dirs["run"] / "meta.json"
    with open(path, "w", encoding="utf-8") as f:
        json.dump(meta, f, indent=2, ensure_ascii=False, default=str)
    return path
