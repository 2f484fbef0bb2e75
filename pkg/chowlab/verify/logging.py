"""
Log plumbing for verification runs.

Check outcomes go to the ``chowlab.verify.checks`` logger. Its only handler by
default is a bounded in-memory buffer, which the suite runner reads back to
attach the failing events to a ``SuiteReport``; nothing reaches stdout unless
``--verbose`` asks for it.
"""
import logging
import threading
from collections import deque

_STDERR_FORMAT = "%(asctime)s %(levelname)s %(name)s %(message)s"


class RingBufferHandler(logging.Handler):
    """
    Bounded handler that remembers the last ``max_entries`` check events.

    Each event is stored as a plain dict with the keys ``event``, ``level`` and
    ``details``, where ``details`` is whatever the caller passed through
    ``extra={"details": ...}``.
    """

    def __init__(self, max_entries: int = 200):
        super().__init__()
        self.max_entries = max_entries
        self._events: deque[dict] = deque(maxlen=max_entries)
        self._guard = threading.Lock()

    def emit(self, record: logging.LogRecord) -> None:
        details = getattr(record, "details", None) or {}
        with self._guard:
            self._events.append({"event": record.getMessage(), "level": record.levelname, "details": dict(details)})

    def get_events(self, min_level: int = logging.NOTSET) -> list[dict]:
        """Snapshot of the buffer, oldest first, optionally filtered by level."""
        with self._guard:
            snapshot = list(self._events)
        if min_level <= logging.NOTSET:
            return snapshot
        return [e for e in snapshot if logging.getLevelName(e["level"]) >= min_level]

    def clear(self) -> None:
        with self._guard:
            self._events.clear()


def ring_buffer(logger: logging.Logger) -> RingBufferHandler | None:
    return next((h for h in logger.handlers if isinstance(h, RingBufferHandler)), None)


def create_logger(name: str, ring_size: int) -> logging.Logger:
    """
    Fetches logger ``name`` and makes sure it carries a ``RingBufferHandler``.

    The first call fixes the buffer size; later calls hand back the same
    logger untouched. The logger does not propagate, so check chatter stays
    out of the root logger.
    """
    logger = logging.getLogger(name)
    if ring_buffer(logger) is None:
        logger.addHandler(RingBufferHandler(max_entries=ring_size))
        logger.setLevel(logging.INFO)
        logger.propagate = False
    return logger


def enable_stderr(verbose: bool, *loggers: logging.Logger) -> None:
    """Mirrors the ``chowlab`` logger, and any extra ``loggers``, onto stderr."""
    level = logging.DEBUG if verbose else logging.INFO
    stream = logging.StreamHandler()
    stream.setFormatter(logging.Formatter(_STDERR_FORMAT))
    for logger in (logging.getLogger("chowlab"), *loggers):
        logger.setLevel(level)
        if not any(type(h) is logging.StreamHandler for h in logger.handlers):
            logger.addHandler(stream)
