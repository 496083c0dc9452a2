"""Load named verification runs from YAML preset files."""

from pathlib import Path
from typing import Optional

import yaml

from ..config import SUITES_DIR


def preset_path(name: str, directory: Optional[Path] = None) -> Path:
    directory = SUITES_DIR if directory is None else directory
    return directory / f"{name}.yaml"


def list_presets(directory: Optional[Path] = None) -> list[str]:
    directory = SUITES_DIR if directory is None else directory
    if not directory.exists():
        return []
    return sorted(p.stem for p in directory.glob("*.yaml"))


def load_preset(name: str, directory: Optional[Path] = None) -> list[dict]:
    """
    Load the runs of preset ``name``.

    Expected YAML structure:
    ```yaml
    description: Smoke-sized sweeps
    runs:
      - suite: monkey-identity
        params:
          n_max: 3
          size_max: 4
          k_max: 3
    ```

    Raises:
        FileNotFoundError: if there is no such preset.
        ValueError: if an entry has no ``suite``.
    """
    path = preset_path(name, directory)
    if not path.exists():
        raise FileNotFoundError(f"no preset {name!r} in {path.parent}")

    with open(path, "r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}

    runs = []
    for entry in data.get("runs", []):
        if "suite" not in entry:
            raise ValueError(f"preset {name!r} has a run without a suite: {entry}")
        runs.append({"suite": entry["suite"], "params": dict(entry.get("params") or {})})
    return runs
