from pathlib import Path
from typing import Union

from loguru import logger
from prometheus_client import write_to_textfile

from djinn.core.monitoring import REGISTRY


def export_metrics(path: Union[str, Path]) -> Path:
    """Write the pipeline registry in the Prometheus text format."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    write_to_textfile(str(path), REGISTRY)
    logger.info(f"Metrics written to {path}")
    return path
