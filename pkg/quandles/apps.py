from django.apps import AppConfig
import logging

logger = logging.getLogger(__name__)

class QuandlesConfig(AppConfig):
    name = "quandles"
    verbose_name = "Quandle Toolkit"

    def ready(self):
        # Importing the config module loads .env overrides once per process.
        try:
            from .config import settings as _settings  # noqa: F401
            logger.info("quandles: configuration loaded (threads=%s, budget=%s).",
                        _settings.DEFAULT_THREADS, _settings.DEFAULT_BUDGET)
        except Exception as e:
            logger.exception("Failed to load quandles configuration: %s", e)
            raise
