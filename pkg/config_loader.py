#!/usr/bin/env python3
"""
Lightweight YAML configuration loader with sensible defaults.

The same loader serves the project defaults in `config.yml` and the JSON
device configs (parsed with the json module: YAML 1.1 reads `1e-10` as a
string).

Can also be run as a CLI tool to print the resolved defaults as
environment variable exports for shell consumption. Exported SPIRALMECH_*
values are read back by `apply_env_overrides` when run configs are parsed:

Usage:
  eval "$(python3 config_loader.py [material|solver])"
"""

import copy
import json
import os
import sys
from pathlib import Path
from typing import Any, Dict, Mapping, Tuple

import yaml
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _deep_get(d: Dict[str, Any], path: str, default: Any = None) -> Any:
    """Fetch nested key via dot.path with default."""
    cur: Any = d
    for part in path.split("."):
        if not isinstance(cur, dict) or part not in cur:
            return default
        cur = cur[part]
    return cur


def load_config(config_path: str | Path | None = None) -> Dict[str, Any]:
    """
    Load YAML (or JSON) config. If not provided, uses $SPIRALMECH_CONFIG
    or falls back to `config.yml` in project root.
    """
    if config_path is None:
        env_path = os.getenv("SPIRALMECH_CONFIG")
        if env_path:
            config_path = Path(env_path)
        else:
            config_path = Path(__file__).resolve().parent / "config.yml"
    else:
        config_path = Path(config_path)

    if not config_path.exists():
        raise FileNotFoundError(f"Config file not found: {config_path}")

    with open(config_path, "r", encoding="utf-8") as f:
        if config_path.suffix.lower() == ".json":
            data = json.load(f)
        else:
            data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"Config root must be a mapping: {config_path}")
    return data


# shell variable -> (section, dotted key in config.yml, type)
ENV_KEYS: Dict[str, Tuple[str, str, type]] = {
    "SPIRALMECH_ELEMS_PER_TURN": ("solver", "solver.elems_per_turn", int),
    "SPIRALMECH_N_MODES": ("solver", "solver.n_modes", int),
    "SPIRALMECH_EIGEN_TOL": ("solver", "solver.eigen_tolerance", float),
    "SPIRALMECH_YOUNGS_GPA": ("material", "material.youngs_gpa", float),
    "SPIRALMECH_POISSON": ("material", "material.poisson", float),
    "SPIRALMECH_DENSITY": ("material", "material.density_kg_m3", float),
}


def as_env_dict(cfg: Dict[str, Any], section: str = "material") -> Dict[str, str]:
    """
    Flatten one section of the defaults to SPIRALMECH_* variable names.

    Args:
        cfg: The configuration dictionary
        section: Either 'material' or 'solver'
    """
    return {
        name: str(_deep_get(cfg, path))
        for name, (owner, path, _) in ENV_KEYS.items()
        if owner == section and _deep_get(cfg, path) is not None
    }


def apply_env_overrides(cfg: Dict[str, Any], environ: Mapping[str, str] | None = None) -> Dict[str, Any]:
    """
    Copy of `cfg` with any SPIRALMECH_* variables from the environment
    written over the matching defaults.

    Raises:
        ValueError: A variable is set but does not parse as its type
    """
    environ = os.environ if environ is None else environ
    merged = copy.deepcopy(cfg)
    for name, (_, path, kind) in ENV_KEYS.items():
        raw = environ.get(name)
        if raw is None or raw == "":
            continue
        try:
            value = kind(raw)
        except ValueError as e:
            raise ValueError(f"{name}={raw!r} is not a valid {kind.__name__}") from e
        *parents, leaf = path.split(".")
        node = merged
        for part in parents:
            node = node.setdefault(part, {})
        node[leaf] = value
    return merged


def main() -> None:
    """CLI entry point for printing environment variable exports."""
    section = sys.argv[1] if len(sys.argv) > 1 else "material"
    if section not in ("material", "solver"):
        print(
            f"Error: Invalid section '{section}'. Must be 'material' or 'solver'.",
            file=sys.stderr,
        )
        sys.exit(1)

    cfg = load_config()
    env = as_env_dict(cfg, section=section)
    for key, value in env.items():
        if value is None:
            continue
        # Safely quote values for shell
        sval = str(value).replace('"', '\\"')
        print(f'export {key}="{sval}"')


if __name__ == "__main__":
    main()
