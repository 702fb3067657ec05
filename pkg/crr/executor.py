"""
This module provides executor classes that run the library's pure numerical functions
on worker processes or threads and hand the results back to :mod:`asyncio`.

With these executors you can run a sync function with `await executor.run(fn, *args, **kwargs)`.
The `executor.submit(fn, *args, **kwargs)` method works like the :mod:`concurrent.futures`
one but returns an :class:`asyncio.Future`. Executors created with ``max_workers=0``
run every job inline in the calling thread (synchronous mode), which is the default
configuration, see :func:`crr.config.get_default_executor`.

Grid tabulations (orthogonality matrices, CLI ``--parallel``) go through
:func:`evaluate_grid`, which keeps results in input order whatever the completion order.

Executor Classes:
    - :class:`AsyncProcessPoolExecutor`
    - :class:`AsyncThreadPoolExecutor`

See Also:
    - :mod:`concurrent.futures` for the original synchronous executor implementations.
"""

import asyncio
import concurrent.futures
import multiprocessing.context
from asyncio.events import _get_running_loop
from asyncio.futures import _convert_future_exc
from logging import DEBUG, getLogger

from crr._typing import *

logger = getLogger(__name__)

Initializer = Callable[..., object]


class _AsyncExecutorMixin(concurrent.futures.Executor):
    """
    A mixin for Executors to provide asynchronous run, submit and ordered map methods.

    In asynchronous (normal) mode, functions are submitted to the executor and awaited.
    In synchronous mode, functions are executed directly in the current thread.

    Examples:
        >>> async def example():
        >>>     value = await executor.run(crr_eval_recurrence, ParamB(1.0), 2, 1.0)
        >>>     print(value)
    """

    sync_mode: bool
    """Indicates if the executor is in synchronous mode (max_workers == 0)."""

    _max_workers: int

    _workers: str
    """The type of workers used."""

    async def run(self, fn: Callable[P, T], *args: P.args, **kwargs: P.kwargs) -> T:
        """
        Runs ``fn`` on the executor and awaits its result.

        In synchronous mode, the function is executed directly in the current thread.

        Args:
            fn: The function to run. Must be picklable for process pools.
            *args: Positional arguments for the function.
            **kwargs: Keyword arguments for the function.

        See Also:
            - :meth:`submit` for submitting functions to the executor.
        """
        return fn(*args, **kwargs) if self.sync_mode else await self.submit(fn, *args, **kwargs)

    def submit(self, fn: Callable[P, T], *args: P.args, **kwargs: P.kwargs) -> "asyncio.Future[T]":  # type: ignore [override]
        """
        Submits a job to the executor and returns an :class:`asyncio.Future` that can be
        awaited for the result without blocking. Must be called with an event loop running.

        Args:
            fn: The function to submit.
            *args: Positional arguments for the function.
            **kwargs: Keyword arguments for the function.

        See Also:
            - :meth:`run` for running functions with the executor.
        """
        loop = asyncio.get_running_loop()
        fut = loop.create_future()
        if self.sync_mode:
            try:
                fut.set_result(fn(*args, **kwargs))
            except Exception as e:
                fut.set_exception(e)
            return fut

        if logger.isEnabledFor(DEBUG):
            logger._log(DEBUG, "%s submitting %s%s", (self, getattr(fn, "__qualname__", fn), args))

        def _call_copy_future_state(cf_fut: concurrent.futures.Future) -> None:
            if fut.cancelled():
                return
            loop.call_soon_threadsafe(_copy_future_state, cf_fut, fut)

        super().submit(fn, *args, **kwargs).add_done_callback(_call_copy_future_state)
        return fut

    async def map_ordered(self, fn: Callable[..., T], jobs: Iterable[Tuple[Any, ...]]) -> List[T]:
        """
        Runs ``fn(*job)`` for every job and returns the results in input order.

        Examples:
            >>> async def example():
            >>>     rows = await executor.map_ordered(crr_eval_recurrence, [(1.0, 2, x) for x in xs])
        """
        if self.sync_mode:
            return [fn(*job) for job in jobs]
        return list(await asyncio.gather(*(self.submit(fn, *job) for job in jobs)))

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {hex(id(self))} [{self._max_workers} {self._workers}]>"

    def __init_mixin__(self) -> None:
        self.sync_mode = self._max_workers == 0


# Process


class AsyncProcessPoolExecutor(_AsyncExecutorMixin, concurrent.futures.ProcessPoolExecutor):
    """
    A :class:`concurrent.futures.ProcessPoolExecutor` subclass providing asynchronous
    run and submit methods that support kwargs, with support for synchronous mode.

    Examples:
        >>> executor = AsyncProcessPoolExecutor(max_workers=4)
        >>> future = executor.submit(crr_eval_recurrence, ParamB(1.0), 2, 1.0)
        >>> result = await future
    """

    _workers = "processes"

    def __init__(
        self,
        max_workers: Optional[int] = None,
        mp_context: Optional[multiprocessing.context.BaseContext] = None,
        initializer: Optional[Initializer] = None,
        initargs: Tuple[Any, ...] = (),
    ) -> None:
        if max_workers == 0:
            super().__init__(1, mp_context, initializer, initargs)
            self._max_workers = 0
        else:
            super().__init__(max_workers, mp_context, initializer, initargs)
        self.__init_mixin__()


# Thread


class AsyncThreadPoolExecutor(_AsyncExecutorMixin, concurrent.futures.ThreadPoolExecutor):
    """
    A :class:`concurrent.futures.ThreadPoolExecutor` subclass providing asynchronous
    run and submit methods that support kwargs, with support for synchronous mode.

    Examples:
        >>> executor = AsyncThreadPoolExecutor(max_workers=4, thread_name_prefix="crr")
        >>> future = executor.submit(crr_eval_recurrence, ParamB(1.0), 2, 1.0)
        >>> result = await future
    """

    _workers = "threads"

    def __init__(
        self,
        max_workers: Optional[int] = None,
        thread_name_prefix: str = "",
        initializer: Optional[Initializer] = None,
        initargs: Tuple[Any, ...] = (),
    ) -> None:
        if max_workers == 0:
            super().__init__(1, thread_name_prefix, initializer, initargs)
            self._max_workers = 0
        else:
            super().__init__(max_workers, thread_name_prefix, initializer, initargs)
        self.__init_mixin__()


AsyncExecutor = Union[AsyncThreadPoolExecutor, AsyncProcessPoolExecutor]


def evaluate_grid(
    fn: Callable[..., T],
    jobs: Iterable[Tuple[Any, ...]],
    executor: Optional[AsyncExecutor] = None,
) -> List[T]:
    """
    Blocking ordered map of ``fn`` over ``jobs``.

    Outside an event loop the jobs go through :meth:`map_ordered` under :func:`asyncio.run`.
    Called from inside a running loop, where :func:`asyncio.run` is not allowed, it falls back
    to the blocking :meth:`concurrent.futures.Executor.map`, which also keeps input order.

    Args:
        fn: A module-level function (picklable for process pools).
        jobs: Argument tuples.
        executor: Defaults to :func:`crr.config.get_default_executor`.

    Examples:
        >>> evaluate_grid(pow, [(2, 3), (3, 2)])
        [8, 9]
    """
    if executor is None:
        from crr.config import get_default_executor

        executor = get_default_executor()
    jobs = list(jobs)
    if executor.sync_mode or not jobs:
        return [fn(*job) for job in jobs]
    if _get_running_loop() is not None:
        if logger.isEnabledFor(DEBUG):
            logger._log(DEBUG, "%s: event loop running, mapping %s jobs without it", (executor, len(jobs)))
        return list(executor.map(fn, *zip(*jobs)))
    return asyncio.run(executor.map_ordered(fn, jobs))


def _copy_future_state(cf_fut: concurrent.futures.Future, fut: asyncio.Future) -> None:
    """Copies the outcome of a :class:`concurrent.futures.Future` onto an asyncio one."""
    if fut.cancelled():
        return
    exception = cf_fut.exception()
    if exception is None:
        fut.set_result(cf_fut.result())
    else:
        fut.set_exception(_convert_future_exc(exception))


__all__ = [
    "AsyncThreadPoolExecutor",
    "AsyncProcessPoolExecutor",
    "AsyncExecutor",
    "evaluate_grid",
]
