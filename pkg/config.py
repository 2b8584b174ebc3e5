import json
import logging
import os
from dataclasses import asdict, dataclass

from dotenv import load_dotenv

load_dotenv()

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")
OUTPUT_FORMATS = ("text", "json")


@dataclass
class Config:
    """Configuration settings for the poset code toolkit"""

    # Resource guards
    oracle_guard: int = int(os.getenv("POSET_CODES_ORACLE_GUARD", "40"))
    enumeration_guard: int = int(os.getenv("POSET_CODES_ENUMERATION_GUARD", "100000"))
    axiom_check_guard: int = 200
    cover_pair_guard: int = int(os.getenv("POSET_CODES_COVER_PAIR_GUARD", "1000000"))
    matching_level_guard: int = 20

    # Output Configuration
    output_format: str = "text"

    # Logging Configuration
    log_level: str = os.getenv("POSET_CODES_LOG_LEVEL", "WARNING")
    log_file: str = ""

    def validate(self):
        """Validate configuration settings"""
        errors = []

        for name in ("oracle_guard", "enumeration_guard", "axiom_check_guard", "cover_pair_guard", "matching_level_guard"):
            if getattr(self, name) < 1:
                errors.append(f"{name} must be at least 1")

        if self.output_format not in OUTPUT_FORMATS:
            errors.append(f"output_format must be one of {', '.join(OUTPUT_FORMATS)}")

        if self.log_level.upper() not in LOG_LEVELS:
            errors.append(f"log_level must be one of {', '.join(LOG_LEVELS)}")

        if errors:
            raise ValueError(f"Configuration errors: {', '.join(errors)}")

        return True

    def get_display_config(self):
        """Get configuration for display"""
        return asdict(self)

    def update_from_args(self, args):
        """Update logging configuration from command line arguments"""
        if getattr(args, "debug", False):
            self.log_level = "DEBUG"


# Global configuration instance
config = Config()


def load_config(config_file=None):
    """Load configuration from a JSON file if provided, then validate"""
    if config_file and os.path.exists(config_file):
        with open(config_file, "r") as f:
            config_data = json.load(f)

        for key, value in config_data.items():
            if hasattr(config, key):
                setattr(config, key, value)
            else:
                logging.warning(f"Ignoring unknown configuration key '{key}'")

        logging.info(f"Configuration loaded from {config_file}")
    elif config_file:
        logging.warning(f"Configuration file {config_file} not found, using defaults")

    config.validate()
    return config


def save_config(config_file="config.json"):
    """Save current configuration to file"""
    try:
        with open(config_file, "w") as f:
            json.dump(config.get_display_config(), f, indent=2)
        return True
    except OSError as e:
        logging.error(f"Error saving config: {e}")
        return False


def print_config():
    """Print current configuration"""
    print("\n🔧 CURRENT CONFIGURATION:")
    print("=" * 50)

    for key, value in config.get_display_config().items():
        print(f"   {key}: {value}")

    print("=" * 50)
