# qverify/config.py

import os
from pathlib import Path

from dotenv import load_dotenv

# Get the directory where the package is located
PACKAGE_DIR = Path(__file__).resolve().parent

# i18n translations directory
TRANSLATIONS_DIR = PACKAGE_DIR / "translations"

load_dotenv()


def get_env_variable(var_name, default=None):
    return os.environ.get(var_name, default)


def get_env_int(var_name, default: int) -> int:
    value = get_env_variable(var_name)
    if value is None or value == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{var_name} must be an integer, got {value!r}")


# Order used when a verification does not name one
DEFAULT_ORDER = get_env_int("QVERIFY_ORDER", 200)

# Worker threads for parallel catalog verification
WORKERS = get_env_int("QVERIFY_WORKERS", 4)

# CLI interaction language
LANGUAGE = get_env_variable("QVERIFY_LANGUAGE", "en")

LOG_LEVEL = get_env_variable("QVERIFY_LOG_LEVEL", "WARNING").upper()

# HTTP service
HOST = get_env_variable("QVERIFY_HOST", "0.0.0.0")
PORT = get_env_int("QVERIFY_PORT", 8002)
