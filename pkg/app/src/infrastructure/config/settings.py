import os
try:
    from pydantic_settings import BaseSettings
except ImportError:
    from pydantic import BaseSettings
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Settings(BaseSettings):
    """
    Configurações da aplicação.

    Aplicando o princípio Single Responsibility Principle (SRP) -
    responsável apenas pela gestão de configurações.

    Nenhuma configuração altera resultados matemáticos: apenas verbosidade
    de logs, diretório de artefatos e quais baterias longas são executadas.
    """

    # Application settings
    app_name: str = os.getenv("APP_NAME", "Stable Basis Calculator")
    app_version: str = os.getenv("APP_VERSION", "1.0.0")

    # Logging settings
    log_level: str = os.getenv("LOG_LEVEL", "WARNING")

    # Artifact settings
    output_dir: str = os.getenv("OUTPUT_DIR", "artifacts")

    # Verification settings
    random_seed: int = 20170101
    random_vectors: int = int(os.getenv("RANDOM_VECTORS", "50"))
    long_suite: bool = os.getenv("LONG_SUITE", "False").lower() == "true"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"


# Instância global das configurações
settings = Settings()
