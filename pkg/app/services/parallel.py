from __future__ import annotations

import logging
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator, List, Optional, TypeVar

from app.core.config import settings
from app.core.errors import PreconditionViolated

logger = logging.getLogger(__name__)

A = TypeVar("A")
R = TypeVar("R")


def resolve_workers(workers: Optional[int]) -> int:
    n = settings.STERN_WORKERS if workers is None else workers
    if n < 1:
        raise PreconditionViolated(f"worker count must be >= 1, got {n}")
    return n


def ordered_imap(func: Callable[[A], R], items: Iterable[A], workers: Optional[int] = None, chunksize: int = 1) -> Iterator[R]:
    """Map func over items in input order; a process pool is used only for workers > 1.

    func must be a module-level callable so it can be pickled.
    """
    n = resolve_workers(workers)
    if n == 1:
        for item in items:
            yield func(item)
        return
    logger.debug("starting pool with %d workers", n)
    with Pool(processes=n) as pool:
        for result in pool.imap(func, items, chunksize=chunksize):
            yield result


def ordered_map(func: Callable[[A], R], items: Iterable[A], workers: Optional[int] = None, chunksize: int = 1) -> List[R]:
    return list(ordered_imap(func, items, workers=workers, chunksize=chunksize))
