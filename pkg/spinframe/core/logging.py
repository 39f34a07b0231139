import logging
import sys
from typing import Optional

from loguru import logger

from spinframe.config import settings


class InterceptHandler(logging.Handler):
    """
    Handler para interceptar logs do logging padrão do Python e redirecionar para o Loguru.
    Veja: https://loguru.readthedocs.io/en/stable/resources/recipes.html#intercepting-standard-logging-messages-on-the-fly
    """

    def emit(self, record):
        # Get corresponding Loguru level if it exists
        try:
            level = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Find caller from where originated the logged message
        frame, depth = logging.currentframe(), 2
        while frame.f_code.co_filename == logging.__file__:
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def setup_logging(level: Optional[str] = None):
    """
    Configura o sistema de logging baseado no ambiente

    A saída vai sempre para stderr: stdout fica reservado para o CSV dos comandos.

    Args:
        level: Nível de log (sobrescreve settings.LOG_LEVEL, usado por -v/-q da CLI)
    """
    # Remover handlers padrão do Loguru
    logger.remove()

    log_level = (level or settings.LOG_LEVEL).upper()

    serialize = settings.ENVIRONMENT == "production" or settings.LOG_FORMAT == "json"
    if serialize:
        # Uma linha JSON por evento, escapada pelo próprio Loguru
        log_format = "{message}"
        colorize = False
    else:
        log_format = (
            "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
            "<level>{level: <8}</level> | "
            "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
            "<level>{message}</level>"
        )
        colorize = None

    logger.add(
        sys.stderr,
        format=log_format,
        level=log_level,
        colorize=colorize,
        serialize=serialize,
        backtrace=settings.DEBUG,
        diagnose=settings.DEBUG,
    )

    # File output (opcional)
    if settings.LOG_FILE:
        logger.add(
            settings.LOG_FILE,
            format=log_format,
            level="DEBUG",
            serialize=serialize,
            rotation="1 day",
            retention="7 days",
            compression="zip",
        )

    # Interceptar logs de bibliotecas (numpy/scipy warnings via logging, etc)
    logging.basicConfig(handlers=[InterceptHandler()], level=0, force=True)

    logger.debug(f"Logging configurado - Ambiente: {settings.ENVIRONMENT} | Nível: {log_level}")

    return logger


# Instância global do logger
app_logger = setup_logging()
