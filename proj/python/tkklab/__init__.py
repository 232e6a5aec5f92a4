from ._core import (
    ConfigError,
    FieldError,
    FiniteField,
    command_names,
    parse_config,
    polygon_stats,
    run,
    run_text,
)

__all__ = [
    "ConfigError",
    "FieldError",
    "FiniteField",
    "command_names",
    "parse_config",
    "polygon_stats",
    "run",
    "run_text",
]
