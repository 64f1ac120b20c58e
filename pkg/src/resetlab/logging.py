"""Logging helpers providing structured context."""

from __future__ import annotations

import logging
import sys
from collections.abc import Mapping, MutableMapping
from typing import Any, cast

_RESERVED_KWARGS = frozenset({"exc_info", "stack_info", "stacklevel", "extra"})


class StructuredAdapter(logging.LoggerAdapter[logging.Logger]):
    """LoggerAdapter that preserves structured key-value context.

    Keyword arguments that the logging module does not know are moved into
    ``extra`` so call sites can write ``log.info("msg", period=3)``.
    """

    def process(
        self, msg: Any, kwargs: MutableMapping[str, Any]
    ) -> tuple[Any, MutableMapping[str, Any]]:
        extra_mapping = cast(Mapping[str, Any], getattr(self, "extra", {}))
        extra: dict[str, Any] = dict(extra_mapping)
        extras = kwargs.get("extra")
        if isinstance(extras, dict):
            extra.update(extras)
        mutable_kwargs: MutableMapping[str, Any] = {}
        for key, value in kwargs.items():
            if key in _RESERVED_KWARGS:
                mutable_kwargs[key] = value
            else:
                extra[key] = value
        mutable_kwargs["extra"] = extra
        return msg, mutable_kwargs


class KeyValueFormatter(logging.Formatter):
    """Formatter appending structured context as ``key=value`` pairs."""

    _STANDARD = frozenset(
        vars(logging.LogRecord("x", logging.INFO, "", 0, "", None, None))
    ) | {"message", "asctime"}

    def format(self, record: logging.LogRecord) -> str:
        base = super().format(record)
        context = {
            key: value
            for key, value in vars(record).items()
            if key not in self._STANDARD
        }
        if not context:
            return base
        pairs = " ".join(f"{key}={value}" for key, value in sorted(context.items()))
        return f"{base} {pairs}"


def get_logger(name: str, **context: Any) -> StructuredAdapter:
    """Return a structured logger adapter.

    Args:
        name: Logger name.
        **context: Additional structured context to attach to log records.

    Returns:
        A :class:`StructuredAdapter` bound to ``name``.
    """

    logger = logging.getLogger(name)
    return StructuredAdapter(logger, context)


def configure_logging(verbosity: int = 0) -> None:
    """Install a stderr handler on the ``resetlab`` logger.

    Args:
        verbosity: 0 for warnings, 1 for info, 2 or more for debug output.
    """

    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity >= 2:
        level = logging.DEBUG
    root = logging.getLogger("resetlab")
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(KeyValueFormatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)
