import logging
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Application configuration, loaded from environment or defaults."""

    version: str = "0.3.0"

    # Carrier bounds
    max_carrier_order: int = 1024
    exhaustive_bound: int = 12
    enumeration_bound: int = 6
    canonical_bound: int = 8

    # Verification sweep sizes
    verify_max_order: int = 4
    verify_hom_order: int = 4
    verify_product_order: int = 25

    # Logging settings
    log_file: Optional[str] = None
    log_level: str = "WARNING"
    debug: bool = False

    # Read environment file and ignore any extra environment variables
    model_config = SettingsConfigDict(env_prefix="QUANDLE_", env_file=".env", extra="ignore")


settings = Settings()

# Default location for user-supplied config when --config is omitted
DEFAULT_USER_CONFIG_FILE = "quandle-closure.yaml"

# Raw contents of the YAML config if loaded via CLI
user_config: dict | None = None

# YAML section -> {key: settings field}
_OVERRIDES = {
    "bounds": {
        "carrier": "max_carrier_order",
        "exhaustive": "exhaustive_bound",
        "enumeration": "enumeration_bound",
        "canonical": "canonical_bound",
    },
    "verify": {
        "max_order": "verify_max_order",
        "hom_order": "verify_hom_order",
        "product_order": "verify_product_order",
    },
}


def configure_logging() -> None:
    """
    Configure root logger based on settings.
    """
    level = getattr(logging, settings.log_level.upper(), logging.WARNING)

    # Console handler with color for WARNING messages
    console_handler = logging.StreamHandler()
    console_handler.setLevel(level)

    class ColorFormatter(logging.Formatter):
        """Formatter that highlights WARNING level logs in red."""

        RED = "\033[31m"
        RESET = "\033[0m"

        def format(self, record):
            msg = super().format(record)
            if record.levelno == logging.WARNING:
                return f"{self.RED}{msg}{self.RESET}"
            return msg

    log_format = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    console_handler.setFormatter(ColorFormatter(log_format))
    handlers: list[logging.Handler] = [console_handler]

    # File handler for persistent logs (no color)
    if settings.log_file:
        file_handler = logging.FileHandler(settings.log_file)
        file_handler.setLevel(level)
        file_handler.setFormatter(logging.Formatter(log_format))
        handlers.append(file_handler)

    logging.basicConfig(level=level, handlers=handlers, force=True)


def load_user_config(path: str) -> None:
    """
    Load a YAML config file overriding carrier bounds and verification sizes.
    """
    import yaml

    global user_config
    with open(path, "r") as f:
        cfg = yaml.safe_load(f) or {}
    if not isinstance(cfg, dict):
        logger.error("Config %s is not a mapping, ignoring: %r", path, cfg)
        return
    user_config = cfg
    logger.info("Loaded user config from %s: %r", path, cfg)

    for section, fields in _OVERRIDES.items():
        entries = cfg.get(section)
        if entries is None:
            continue
        if not isinstance(entries, dict):
            logger.error(
                "Invalid '%s' section (expected mapping), skipping: %r", section, entries
            )
            continue
        for key, value in entries.items():
            field = fields.get(key)
            if field is None:
                logger.error("Unknown key '%s.%s' in %s; skipping", section, key, path)
                continue
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                logger.error(
                    "Invalid value for '%s.%s': expected positive int, got %r; skipping",
                    section,
                    key,
                    value,
                )
                continue
            setattr(settings, field, value)
            logger.info("%s overridden to: %r", field, value)
