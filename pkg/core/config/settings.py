"""
Layered configuration for qformlab.

``config.yaml`` at the project root is composed with Hydra so command-line
overrides use the familiar ``key=value`` syntax, converted to plain containers
with OmegaConf and validated by pydantic.
"""

import os
from pathlib import Path
from typing import Iterable, Literal, Optional

import psutil
from hydra import compose, initialize_config_dir
from hydra.core.global_hydra import GlobalHydra
from omegaconf import OmegaConf
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..errors import ConfigurationError

PROJECT_ROOT = Path(__file__).resolve().parents[2]
THREADS_ENV = 'QFORMLAB_THREADS'


class _Section(BaseModel):
    model_config = ConfigDict(extra='forbid')


class LoggingSettings(_Section):
    level: str = 'WARNING'
    colorful: bool = True
    file: Optional[str] = None


class ThetaSettings(_Section):
    zero_threshold: float = Field(1e-9, gt=0)


class RepNumSettings(_Section):
    validation_order: int = Field(500, ge=1)


class ClassifySettings(_Section):
    identity_order: int = Field(1000, ge=1)
    search_order: int = Field(500, ge=1)
    probe_order: int = Field(300, ge=2)
    probe_threshold: int = Field(10, ge=1)


class VerifySettings(_Section):
    fixtures: Optional[str] = None
    workers: Optional[int] = Field(None, ge=1)
    tau_order: int = Field(1500, ge=1)
    van_der_blij_order: int = Field(2000, ge=1)
    product_order: int = Field(1000, ge=2)


class CliSettings(_Section):
    default_format: Literal['text', 'json', 'csv'] = 'text'
    fdr_order: int = Field(25, ge=1)


class Settings(_Section):
    logging: LoggingSettings = Field(default_factory=LoggingSettings)
    theta: ThetaSettings = Field(default_factory=ThetaSettings)
    repnum: RepNumSettings = Field(default_factory=RepNumSettings)
    classify: ClassifySettings = Field(default_factory=ClassifySettings)
    verify: VerifySettings = Field(default_factory=VerifySettings)
    cli: CliSettings = Field(default_factory=CliSettings)

    def fixtures_dir(self) -> Path:
        if self.verify.fixtures:
            return Path(self.verify.fixtures)
        return PROJECT_ROOT / 'data' / 'fixtures'


def load_settings(overrides: Iterable[str] = (), config_dir: Optional[Path] = None) -> Settings:
    """Compose ``config.yaml`` with Hydra overrides and validate the result.

    Without a config file on disk (an installed wheel) the pydantic defaults
    are used and the overrides are applied as an OmegaConf dotlist.
    """
    overrides = list(overrides)
    config_dir = Path(config_dir or PROJECT_ROOT).resolve()

    try:
        if (config_dir / 'config.yaml').exists():
            if GlobalHydra.instance().is_initialized():
                GlobalHydra.instance().clear()
            with initialize_config_dir(config_dir=str(config_dir), version_base=None):
                cfg = compose(config_name='config', overrides=overrides)
        else:
            cfg = OmegaConf.merge(OmegaConf.create(Settings().model_dump()),
                                  OmegaConf.from_dotlist(overrides))
        raw = OmegaConf.to_container(cfg, resolve=True)
    except ConfigurationError:
        raise
    except Exception as e:
        raise ConfigurationError(f"cannot compose configuration: {e}") from e

    try:
        return Settings.model_validate(raw)
    except ValidationError as e:
        raise ConfigurationError(f"invalid configuration: {e}") from e


def resolve_workers(settings: Settings) -> int:
    """Worker count for fan-out: configured value, else physical cores, capped by QFORMLAB_THREADS."""
    workers = settings.verify.workers or psutil.cpu_count(logical=False) or os.cpu_count() or 1

    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            workers = min(workers, max(1, int(cap)))
        except ValueError as e:
            raise ConfigurationError(f"{THREADS_ENV} must be an integer, got {cap!r}") from e

    return workers
