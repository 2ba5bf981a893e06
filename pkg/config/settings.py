# bath-tagging/config/settings.py

import os
from dotenv import load_dotenv

load_dotenv()

# Wartości domyślne można nadpisać zmiennymi środowiskowymi lub plikiem .env
# Parametry pojedynczego uruchomienia (beta, t_max, ...) przychodzą z CLI

GAMMA = float(os.getenv("TAGGING_GAMMA", "1.0"))
OMEGA0 = float(os.getenv("TAGGING_OMEGA0", "1.0"))
PRECISION = int(os.getenv("TAGGING_PRECISION", "12"))

FOCK_DIM = int(os.getenv("TAGGING_FOCK_DIM", "64"))
TAIL_TOLERANCE = float(os.getenv("TAGGING_TAIL_TOLERANCE", "1e-10"))
DT_FACTOR = float(os.getenv("TAGGING_DT_FACTOR", "1e-3"))

ORACLE_CASES = int(os.getenv("TAGGING_ORACLE_CASES", "20"))
ORACLE_SEED = int(os.getenv("TAGGING_ORACLE_SEED", "2019"))
MAX_WORKERS = int(os.getenv("TAGGING_MAX_WORKERS", "4"))

LOG_LEVEL = os.getenv("TAGGING_LOG_LEVEL", "WARNING")

POSITIVE_VARS = {
    "TAGGING_GAMMA": GAMMA,
    "TAGGING_OMEGA0": OMEGA0,
    "TAGGING_PRECISION": PRECISION,
    "TAGGING_FOCK_DIM": FOCK_DIM,
    "TAGGING_TAIL_TOLERANCE": TAIL_TOLERANCE,
    "TAGGING_DT_FACTOR": DT_FACTOR,
    "TAGGING_ORACLE_CASES": ORACLE_CASES,
    "TAGGING_MAX_WORKERS": MAX_WORKERS,
}

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def validate_config() -> None:
    """
    Waliduje wartości konfiguracyjne.
    Powinno być wywoływane przy starcie aplikacji (w main.py).
    """
    invalid = [name for name, value in POSITIVE_VARS.items() if not value > 0]

    if FOCK_DIM < 2:
        invalid.append("TAGGING_FOCK_DIM")
    if LOG_LEVEL.upper() not in LOG_LEVELS:
        invalid.append("TAGGING_LOG_LEVEL")

    if invalid:
        raise RuntimeError(
            f"Nieprawidłowe zmienne środowiskowe: {', '.join(sorted(set(invalid)))}. "
            f"Sprawdź wartości w pliku .env lub w środowisku"
        )
