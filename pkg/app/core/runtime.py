from __future__ import annotations

import logging
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

from .config import global_settings as C

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class Runtime:
    """워커 런타임: 입력 순서를 그대로 보존하는 map.

    jobs <= 1 이면 현재 스레드에서 바로 실행한다. 결과 병합은 항상 입력 순서라
    워커 수와 무관하게 출력이 같다.
    """

    def __init__(self, jobs: Optional[int] = None) -> None:
        self._jobs = jobs

    @property
    def jobs(self) -> int:
        return max(1, self._jobs if self._jobs is not None else C.DEFAULT_JOBS)

    def _executor(self, jobs: int, processes: bool) -> Executor:
        if processes:
            return ProcessPoolExecutor(max_workers=jobs)
        return ThreadPoolExecutor(max_workers=jobs)

    def ordered_map(
            self,
            fn: Callable[[T], R],
            items: Iterable[T],
            *,
            jobs: Optional[int] = None,
            processes: bool = False,
    ) -> List[R]:
        work = list(items)
        n = max(1, jobs if jobs is not None else self.jobs)
        if n == 1 or len(work) <= 1:
            return [fn(x) for x in work]

        n = min(n, len(work))
        logger.debug("ordered_map: %d items on %d %s", len(work), n, "processes" if processes else "threads")
        with self._executor(n, processes) as pool:
            return list(pool.map(fn, work))


runtime = Runtime()
