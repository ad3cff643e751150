"""Root logger configuration for command-line runs.

Library modules only call logging.getLogger(__name__); handlers are attached
here, once, by the entry point.
"""
import logging

__all__ = [
  "CONSOLE_FORMAT",
  "FILE_FORMAT",
  "LoggingSetup",
  "LoggingAddFileHandler",
]

CONSOLE_FORMAT = "[%(asctime)s] %(message)s"
FILE_FORMAT = "%(asctime)s - %(filename)s[line:%(lineno)d] - %(levelname)s: %(message)s"

def LoggingAddFileHandler(file_path) -> logging.Handler:
  handler = logging.FileHandler(file_path, "a", encoding="utf-8")
  handler.setFormatter(logging.Formatter(FILE_FORMAT))
  logging.getLogger().addHandler(handler)
  return handler

def LoggingSetup(level=logging.WARNING, log_file=None) -> None:
  if isinstance(level, str):
    level = getattr(logging, level.upper())
  logging.basicConfig(level=level, format=CONSOLE_FORMAT)
  logging.getLogger().setLevel(level)
  if log_file:
    LoggingAddFileHandler(log_file)
