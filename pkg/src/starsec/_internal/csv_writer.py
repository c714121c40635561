import json
import logging
from pathlib import Path
from typing import Any, Dict, Mapping

import pandas as pd

from ..errors import OutputError
from ..types import ScenarioConfig
from .constants import CSV_FLOAT_FORMAT, VERSION, Messages
from .mappers import ScenarioMapper

logger = logging.getLogger(__name__)


def config_metadata(cfg: ScenarioConfig, **extra: Any) -> Dict[str, Any]:
    """Tool version and the flattened resolved scenario, for CSV headers."""
    metadata: Dict[str, Any] = {"starsec_version": VERSION}
    metadata.update(ScenarioMapper().flatten(ScenarioMapper().scenario_to_dict(cfg)))
    metadata.update(extra)
    return metadata


def write_table(frame: pd.DataFrame, path: Path, metadata: Mapping[str, Any]) -> Path:
    """Write ``#`` metadata lines, then the table with 9 significant digits."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            for key, value in metadata.items():
                handle.write(f"# {key} = {json.dumps(value)}\n")
            frame.to_csv(handle, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator="\n")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror or exc}") from exc
    logger.info(Messages.WROTE_FILE, path)
    return path


def write_json(data: Mapping[str, Any], path: Path) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror or exc}") from exc
    logger.info(Messages.WROTE_FILE, path)
    return path
