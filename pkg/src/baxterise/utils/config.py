"""Configuration management for baxterise."""

import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict

import tomlkit
from tomlkit import comment, document, nl, table

DEFAULT_FAMILIES = "S1,S2,S3,S4,S5,S6,S7,TASEP_S,TASEP_T"


@dataclass(frozen=True)
class Defaults:
    """Run defaults read from the ``[defaults]`` and ``[output]`` sections."""

    seed: int = 42
    trials: int = 5
    max_m: int = 3
    max_n: int = 3
    families: str = DEFAULT_FAMILIES
    indent: int = 2
    log_level: str = "WARNING"


class ConfigManager:
    """Manages the baxterise settings file."""

    def __init__(self, config_dir: Path | None = None):
        """Open the settings file, creating it with defaults on first use.

        Args:
            config_dir: Settings directory, ~/.baxterise when omitted
        """
        self.config_dir = config_dir or Path.home() / ".baxterise"
        self.config_file = self.config_dir / "settings.toml"

        # Create config directory if it doesn't exist
        self.config_dir.mkdir(parents=True, exist_ok=True)

        # Initialize config file if it doesn't exist
        if not self.config_file.exists():
            self._create_default_config()

    def _write(self, doc: tomlkit.TOMLDocument) -> None:
        self.config_file.write_text(tomlkit.dumps(doc))
        # Owner read/write only
        os.chmod(self.config_file, 0o600)

    def _create_default_config(self) -> None:
        base = Defaults()
        doc = document()

        # Header
        doc.add(comment("baxterise configuration file"))
        doc.add(comment("Generated automatically - feel free to edit"))
        doc.add(nl())

        # Defaults section
        defaults = table()
        defaults.add(comment("Defaults for verify and scan (flags override these)"))
        defaults["seed"] = base.seed
        defaults["trials"] = base.trials
        defaults["max_m"] = base.max_m
        defaults["max_n"] = base.max_n
        defaults["families"] = base.families
        doc["defaults"] = defaults
        doc.add(nl())

        # Output section
        output = table()
        output.add(comment("Report formatting and diagnostics"))
        output["indent"] = base.indent
        output["log_level"] = base.log_level
        doc["output"] = output
        self._write(doc)

    def get_config(self) -> Dict[str, Any]:
        return tomlkit.loads(self.config_file.read_text())

    def update_config(self, updates: Dict[str, Any]) -> None:
        """Merge ``{section: {key: value}}`` into the file, keeping its comments."""
        doc = tomlkit.loads(self.config_file.read_text())
        for section, values in updates.items():
            # Create missing sections
            if section not in doc:
                doc[section] = table()
            doc[section].update(values)
        self._write(doc)

    def get_defaults(self) -> Defaults:
        """Typed defaults; missing keys fall back to built-in values."""
        config = self.get_config()
        base = Defaults()
        section = config.get("defaults", {})
        output = config.get("output", {})
        return Defaults(
            seed=int(section.get("seed", base.seed)),
            trials=int(section.get("trials", base.trials)),
            max_m=int(section.get("max_m", base.max_m)),
            max_n=int(section.get("max_n", base.max_n)),
            families=str(section.get("families", base.families)),
            indent=int(output.get("indent", base.indent)),
            log_level=str(output.get("log_level", base.log_level)),
        )
