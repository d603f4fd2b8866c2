from .settings import (
    Settings, LoggingSettings, ThetaSettings, RepNumSettings,
    ClassifySettings, VerifySettings, CliSettings, load_settings, resolve_workers,
)

__all__ = [
    'Settings', 'LoggingSettings', 'ThetaSettings', 'RepNumSettings',
    'ClassifySettings', 'VerifySettings', 'CliSettings', 'load_settings', 'resolve_workers',
]
