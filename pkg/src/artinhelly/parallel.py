from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from .config.settings import settings

T = TypeVar("T")
R = TypeVar("R")


def map_in_order(
    function: Callable[[T], R], items: Sequence[T], jobs: int | None = None
) -> list[R]:
    """Apply ``function`` to every item; results keep the submission order."""
    workers = jobs if jobs is not None else settings.jobs
    if workers <= 1 or len(items) < 2:
        return [function(item) for item in items]
    size = max(1, -(-len(items) // (workers * 4)))
    chunks = [items[k : k + size] for k in range(0, len(items), size)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(lambda chunk: [function(i) for i in chunk], c) for c in chunks]
        return [result for future in futures for result in future.result()]
