import os
from pathlib import Path


class DefaultConfig:
    DEBUG = os.getenv("DEBUG", "False").lower() in ["true", "1", "yes"]

    # Any logging level name, takes precedence over DEBUG
    CAMBRIANITE_LOG = os.getenv("CAMBRIANITE_LOG", "INFO").upper()
    CAMBRIANITE_DATA_FOLDER = os.getenv(
        "CAMBRIANITE_DATA_FOLDER", os.path.join(Path.home(), "cambrianite")
    )
    CAMBRIANITE_LOG_TO_FILE = os.getenv("CAMBRIANITE_LOG_TO_FILE", "False").lower() in [
        "true",
        "1",
        "yes",
    ]
    CAMBRIANITE_LOG_ROTATE_WHEN = os.getenv("CAMBRIANITE_LOG_ROTATE_WHEN", "midnight")
    CAMBRIANITE_LOG_ROTATE_INTERVAL = int(os.getenv("CAMBRIANITE_LOG_ROTATE_INTERVAL", 0))
    CAMBRIANITE_BACKUP_COUNT = int(os.getenv("CAMBRIANITE_BACKUP_COUNT", 7))

    # Desk-scale guards
    CAMBRIANITE_MAX_ORDER = int(os.getenv("CAMBRIANITE_MAX_ORDER", 10**5))
    CAMBRIANITE_MAX_ROOTS = int(os.getenv("CAMBRIANITE_MAX_ROOTS", 2 * 10**4))
    CAMBRIANITE_MAX_COMMUTATION_WORDS = int(
        os.getenv("CAMBRIANITE_MAX_COMMUTATION_WORDS", 10**6)
    )

    # Rendering and sign decisions for algebraic scalars
    CAMBRIANITE_FLOAT_DIGITS = int(os.getenv("CAMBRIANITE_FLOAT_DIGITS", 15))
    CAMBRIANITE_SIGN_PRECISION = int(os.getenv("CAMBRIANITE_SIGN_PRECISION", 60))
