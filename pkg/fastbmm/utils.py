from collections.abc import Callable
from concurrent.futures import ThreadPoolExecutor
from typing import Any


def singleton(cls):
    instances = {}

    def getinstance(*args, **kwargs):
        if cls not in instances:
            instances[cls] = cls(*args, **kwargs)
        return instances[cls]

    return getinstance


def split_ranges(total: int, parts: int) -> list[tuple[int, int]]:
    """
    Split ``range(total)`` into at most ``parts`` contiguous, near-equal ranges.

    Empty ranges are dropped, so the result may be shorter than ``parts``.
    """
    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    ranges = []
    start = 0
    for index in range(parts):
        stop = start + base + (1 if index < extra else 0)
        if stop > start:
            ranges.append((start, stop))
        start = stop
    return ranges


def run_partitioned(
    total: int, workers: int, func: Callable[[int, int], Any]
) -> None:
    """
    Call ``func(start, stop)`` over a static equal-range split of ``range(total)``.

    With one worker (or one range) the call happens on the current thread.
    Exceptions raised by any range are propagated to the caller.
    """
    ranges = split_ranges(total, workers)
    if len(ranges) <= 1:
        for start, stop in ranges:
            func(start, stop)
        return

    with ThreadPoolExecutor(max_workers=len(ranges)) as executor:
        futures = [executor.submit(func, start, stop) for start, stop in ranges]
        for future in futures:
            future.result()


def is_power_of_two(value: int) -> bool:
    return value > 0 and value & (value - 1) == 0
