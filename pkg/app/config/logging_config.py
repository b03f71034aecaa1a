import logging
import sys
from typing import Dict, Optional, TextIO

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"

# Níveis fixos de bibliotecas, independentes do nível pedido
LIBRARY_LEVELS: Dict[str, str] = {
    "sympy": "WARNING",
}


def setup_logging(level: str = "WARNING", stream: Optional[TextIO] = None) -> None:
    """
    Configura o logging da aplicação.

    Os logs vão para stderr; stdout fica reservado ao relatório da tarefa.
    Pode ser chamada de novo (por exemplo com --log-level) e substitui a
    configuração anterior.

    Args:
        level: Nível de logging (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        stream: Destino dos logs, stderr por padrão
    """
    level = level.upper()

    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(logging.Formatter(fmt=LOG_FORMAT, datefmt=DATE_FORMAT))
    logging.basicConfig(level=getattr(logging, level), handlers=[handler], force=True)

    for logger_name in ("app", "src"):
        logging.getLogger(logger_name).setLevel(getattr(logging, level))
    for logger_name, library_level in LIBRARY_LEVELS.items():
        logging.getLogger(logger_name).setLevel(getattr(logging, library_level))

    logging.getLogger(__name__).debug(f"Logging configurado no nível {level}")
