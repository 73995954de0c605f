from collections.abc import Callable
from typing import Generic, TypeVar

from loguru import logger

T = TypeVar("T")


class CallbackManager(Generic[T]):
    """Listeners notified in registration order; a failing listener never stops the run."""

    def __init__(self) -> None:
        self._callbacks: list[Callable[[T], None]] = []

    def __len__(self) -> int:
        return len(self._callbacks)

    def add(self, callback: Callable[[T], None]) -> None:
        if callback not in self._callbacks:
            self._callbacks.append(callback)

    def remove(self, callback: Callable[[T], None]) -> None:
        if callback in self._callbacks:
            self._callbacks.remove(callback)

    def notify(self, value: T) -> int:
        failed = 0
        for callback in self._callbacks:
            try:
                callback(value)
            except Exception as e:
                failed += 1
                logger.error(f"Error in callback for {value!r}: {e}")
        return failed
