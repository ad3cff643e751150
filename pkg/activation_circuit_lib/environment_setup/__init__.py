from .logging_setup import LoggingSetup, LoggingAddFileHandler
