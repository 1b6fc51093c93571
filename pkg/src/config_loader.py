"""
Configuration loader for YAML-based backend, dataset and experiment configs.

This module loads configuration from the config/ directory and validates it
against the pydantic models in config_schemas.

Environment variables can be used in YAML files with the following syntax:
  - ${VAR_NAME}           - Required, fails if not set
  - ${VAR_NAME:-default}  - Optional with default value
  - ${VAR_NAME:?error}    - Required with custom error message
"""
import os
import re
import yaml
from pathlib import Path
from typing import Any, Dict, Optional, Type, TypeVar, Union

from pydantic import BaseModel, ValidationError

from .config_schemas import BackendFile, DatasetsFile, ExperimentConfig
from .errors import InvalidArgumentError, ParseError

# Bundled config directory, used when CONFIG_DIR is unset or lacks a file
_BUNDLED_CONFIG_DIR = Path(__file__).parent.parent / "config"
CONFIG_DIR = Path(os.getenv("CONFIG_DIR", str(_BUNDLED_CONFIG_DIR)))

DEFAULT_DATA_DIR = "./data"

ModelT = TypeVar("ModelT", bound=BaseModel)


def data_dir() -> Path:
    """Default dataset and results directory (LCCVQE_DATA_DIR)."""
    return Path(os.getenv("LCCVQE_DATA_DIR", DEFAULT_DATA_DIR))


def _resolve(filename: str) -> Optional[Path]:
    filepath = CONFIG_DIR / filename
    if filepath.exists():
        return filepath
    # Fallback to the bundled config for development
    local_path = _BUNDLED_CONFIG_DIR / filename
    if local_path.exists():
        return local_path
    return None


def _read_yaml_file(filepath: Path) -> Dict[str, Any]:
    try:
        with open(filepath, "r") as f:
            raw = yaml.safe_load(f) or {}
    except yaml.YAMLError as e:
        line = None
        mark = getattr(e, "problem_mark", None)
        if mark is not None:
            line = mark.line + 1
        raise ParseError(f"Invalid YAML in {filepath}: {e}", line=line) from e
    if not isinstance(raw, dict):
        raise ParseError(f"{filepath} must contain a mapping at the top level")
    return _expand_env_vars_recursive(raw)


def _load_yaml(filename: str) -> Dict[str, Any]:
    """Load a YAML file from the config directory; missing files yield {}."""
    filepath = _resolve(filename)
    if filepath is None:
        return {}
    return _read_yaml_file(filepath)


def _validate(model: Type[ModelT], raw: Dict[str, Any], source: str) -> ModelT:
    try:
        return model(**raw)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or None
        raise ParseError(f"{source}: {first['msg']}", field=field) from e


# Cached configs
_backend_cache: Dict[Path, BackendFile] = {}
_datasets_cache: Optional[DatasetsFile] = None


def resolve_backend_path(name_or_path: Union[str, Path]) -> Path:
    """
    Bundled backend name ("backend7", "backend27") or a path to a YAML file.

    Raises:
        InvalidArgumentError: neither a bundled name nor an existing file
    """
    candidate = Path(name_or_path)
    if candidate.suffix in (".yaml", ".yml") and candidate.exists():
        return candidate
    bundled = _resolve(f"backends/{name_or_path}.yaml")
    if bundled is not None:
        return bundled
    raise InvalidArgumentError(f"Unknown backend '{name_or_path}': not a bundled name or an existing YAML file")


def get_backend_file(name_or_path: Union[str, Path]) -> BackendFile:
    """Validated backend table, cached per resolved path."""
    path = resolve_backend_path(name_or_path).resolve()
    if path not in _backend_cache:
        _backend_cache[path] = _validate(BackendFile, _read_yaml_file(path), str(path))
    return _backend_cache[path]


def get_datasets() -> DatasetsFile:
    """Dataset tables from datasets.yaml."""
    global _datasets_cache
    if _datasets_cache is None:
        raw_config = _load_yaml("datasets.yaml")
        if "tables" not in raw_config:
            raw_config = {"tables": {}}
        _datasets_cache = _validate(DatasetsFile, raw_config, "datasets.yaml")
    return _datasets_cache


def experiment_preset_path(experiment: str, scale: str = "desk") -> Path:
    filepath = _resolve(f"experiments/{experiment}.{scale}.yaml")
    if filepath is None:
        raise InvalidArgumentError(f"No preset for experiment '{experiment}' at scale '{scale}'")
    return filepath


def load_experiment_config(path: Optional[Union[str, Path]] = None,
                           experiment: Optional[str] = None,
                           scale: str = "desk",
                           overrides: Optional[Dict[str, Any]] = None) -> ExperimentConfig:
    """
    Load an experiment config from ``path`` or from the bundled preset.

    Args:
        path: explicit YAML file; takes precedence over ``experiment``
        experiment: experiment tag used to pick config/experiments/<tag>.<scale>.yaml
        scale: preset scale ("desk" or "full")
        overrides: top-level keys replacing file values (CLI flags)
    """
    if path is not None:
        filepath = Path(path)
        if not filepath.exists():
            raise InvalidArgumentError(f"Config file not found: {filepath}")
    elif experiment is not None:
        filepath = experiment_preset_path(experiment, scale)
    else:
        raise InvalidArgumentError("Either a config path or an experiment tag is required")

    raw = _read_yaml_file(filepath)
    raw.setdefault("scale", scale)
    for key, value in (overrides or {}).items():
        if value is not None:
            raw[key] = value
    return _validate(ExperimentConfig, raw, str(filepath))


def reload_configs():
    """Force reload of all configuration files."""
    global _datasets_cache
    _backend_cache.clear()
    _datasets_cache = None


# =============================================================================
# Environment Variable Expansion
# =============================================================================

def _expand_env_var(value: str) -> str:
    """
    Expand environment variables in a string value.

    Supports:
      - ${VAR_NAME}           - Required, fails if not set
      - ${VAR_NAME:-default}  - Optional with default value
      - ${VAR_NAME:?error}    - Required with custom error message

    Raises:
        InvalidArgumentError: If a required variable is not set
    """
    if not isinstance(value, str):
        return value

    # Pattern matches ${VAR}, ${VAR:-default}, ${VAR:?error}
    pattern = r'\$\{([^}:]+)(?::-([^}]*)|:\?([^}]*))?\}'

    def replacer(match):
        var_name = match.group(1)
        default_value = match.group(2)
        error_msg = match.group(3)

        env_value = os.environ.get(var_name)

        if env_value is not None:
            return env_value
        if default_value is not None:
            return default_value
        if error_msg is not None:
            raise InvalidArgumentError(f"Required environment variable {var_name}: {error_msg}")
        raise InvalidArgumentError(f"Environment variable {var_name} is not set")

    return re.sub(pattern, replacer, value)


def _expand_env_vars_recursive(obj: Any) -> Any:
    """Recursively expand environment variables in dicts, lists, and strings."""
    if isinstance(obj, dict):
        return {k: _expand_env_vars_recursive(v) for k, v in obj.items()}
    elif isinstance(obj, list):
        return [_expand_env_vars_recursive(item) for item in obj]
    elif isinstance(obj, str):
        return _expand_env_var(obj)
    return obj
