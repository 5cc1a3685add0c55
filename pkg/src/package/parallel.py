from typing import Callable, Sequence, TypeVar

from tqdm.auto import tqdm
from tqdm.contrib.concurrent import process_map

from package.logger import progress_disabled

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_CHUNK_SIZE = 500


def map_replicas(
    worker: Callable[[T], R],
    items: Sequence[T],
    jobs: int = 1,
    desc: str = "Replicas",
) -> list[R]:
    """
    Applies a picklable worker to every item, in worker processes when
    jobs > 1. Results come back in item order, so they do not depend on jobs.
    """
    disable = progress_disabled()
    if jobs > 1 and len(items) > 1:
        return process_map(
            worker,
            items,
            max_workers=jobs,
            chunksize=1,
            desc=desc,
            disable=disable,
        )
    return [worker(item) for item in tqdm(items, desc=desc, disable=disable)]


def replica_chunks(replicas: int, size: int = DEFAULT_CHUNK_SIZE) -> list[tuple[int, int]]:
    """(chunk index, chunk size) pairs covering `replicas` replicas."""
    return [(i, min(size, replicas - start)) for i, start in enumerate(range(0, replicas, size))]
