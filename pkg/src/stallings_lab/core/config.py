"""
Lab configuration: YAML defaults for sampling and experiments, and logging setup.
"""

from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Any, Dict, List, Optional, Union
import logging

import yaml

from .errors import ConfigError

DEFAULT_CONFIG_PATH = Path("config/lab.yaml")
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


@dataclass(frozen=True)
class LabConfig:
    max_rejections: int = 10_000
    samples: int = 10_000
    seed: int = 0
    jobs: int = 1
    ranks: List[int] = field(default_factory=lambda: [2, 3, 4])
    param_min: int = 2
    param_max: int = 20
    generator_counts: List[int] = field(default_factory=lambda: [4, 6, 8])
    log_level: str = "INFO"
    log_file: Optional[str] = "stallings_lab.log"

    def __post_init__(self):
        if self.max_rejections < 1:
            raise ConfigError("sampling.max_rejections must be at least 1")
        if self.samples < 1:
            raise ConfigError("experiment.samples must be at least 1")
        if self.param_min > self.param_max:
            raise ConfigError("experiment.param_min exceeds experiment.param_max")
        if not self.generator_counts or min(self.generator_counts) < 1:
            raise ConfigError("experiment.generator_counts must list positive counts")

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'LabConfig':
        """Create a config from the nested YAML layout."""
        sampling = data.get("sampling") or {}
        experiment = data.get("experiment") or {}
        logging_section = data.get("logging") or {}
        defaults = cls()
        try:
            return cls(
                max_rejections=int(sampling.get("max_rejections", defaults.max_rejections)),
                samples=int(experiment.get("samples", defaults.samples)),
                seed=int(experiment.get("seed", defaults.seed)),
                jobs=int(experiment.get("jobs", defaults.jobs)),
                ranks=[int(r) for r in experiment.get("ranks", defaults.ranks)],
                param_min=int(experiment.get("param_min", defaults.param_min)),
                param_max=int(experiment.get("param_max", defaults.param_max)),
                generator_counts=[int(k) for k in experiment.get("generator_counts", defaults.generator_counts)],
                log_level=str(logging_section.get("level", defaults.log_level)),
                log_file=logging_section.get("file", defaults.log_file),
            )
        except (TypeError, ValueError) as e:
            raise ConfigError(f"invalid configuration value: {e}") from e

    def to_dict(self) -> Dict[str, Any]:
        flat = asdict(self)
        return {
            "sampling": {"max_rejections": flat["max_rejections"]},
            "experiment": {key: flat[key] for key in
                           ("samples", "seed", "jobs", "ranks", "param_min", "param_max", "generator_counts")},
            "logging": {"level": flat["log_level"], "file": flat["log_file"]},
        }


def load_config(path: Optional[Union[str, Path]] = None) -> LabConfig:
    """Load configuration from YAML; a missing default file means built-in defaults."""
    config_path = Path(path) if path is not None else DEFAULT_CONFIG_PATH
    if not config_path.exists():
        if path is not None:
            raise ConfigError(f"config file not found: {config_path}")
        return LabConfig()
    try:
        with open(config_path) as f:
            data = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        raise ConfigError(f"could not parse {config_path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"{config_path} must contain a mapping")
    return LabConfig.from_dict(data)


def configure_logging(config: LabConfig, verbose: bool = False) -> None:
    """Install the file handler, and a rich console handler when verbose."""
    handlers: List[logging.Handler] = []
    if config.log_file:
        handlers.append(logging.FileHandler(config.log_file))
    if verbose:
        from rich.logging import RichHandler
        handlers.append(RichHandler(show_path=False))
    logging.basicConfig(
        level=getattr(logging, config.log_level.upper(), logging.INFO),
        format=LOG_FORMAT,
        handlers=handlers or [logging.NullHandler()],
        force=True
    )
