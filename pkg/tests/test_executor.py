import asyncio
import threading

import pytest

from crr import config
from crr.exceptions import DomainError
from crr.executor import AsyncProcessPoolExecutor, AsyncThreadPoolExecutor, evaluate_grid
from crr.params import ParamB
from crr.poly import crr_eval_recurrence


def scaled(value, factor=1.0):
    return value * factor


def thread_name(_):
    return threading.current_thread().name


@pytest.mark.asyncio_cooperative
async def test_thread_executor_run_and_submit():
    executor = AsyncThreadPoolExecutor(2)
    assert not executor.sync_mode
    assert await executor.run(scaled, 3, factor=2.0) == 6.0
    fut = executor.submit(crr_eval_recurrence, ParamB(1.0), 2, 1.0)
    assert isinstance(fut, asyncio.Future)
    # P_2(1; x) = (3x² - 1)/4
    assert await fut == pytest.approx(0.5)
    executor.shutdown()


@pytest.mark.asyncio_cooperative
async def test_map_ordered_keeps_input_order():
    executor = AsyncThreadPoolExecutor(4)
    xs = [0.1 * k for k in range(40)]
    results = await executor.map_ordered(crr_eval_recurrence, [(1.5, 6, x) for x in xs])
    assert results == [crr_eval_recurrence(1.5, 6, x) for x in xs]
    executor.shutdown()


@pytest.mark.asyncio_cooperative
async def test_exceptions_propagate():
    executor = AsyncThreadPoolExecutor(1)
    with pytest.raises(DomainError):
        await executor.run(crr_eval_recurrence, -1.0, 2, 0.0)
    executor.shutdown()


@pytest.mark.asyncio_cooperative
async def test_sync_mode_runs_inline():
    executor = AsyncThreadPoolExecutor(0)
    assert executor.sync_mode
    assert await executor.run(thread_name, None) == threading.current_thread().name
    fut = executor.submit(crr_eval_recurrence, -1.0, 2, 0.0)
    assert fut.done()
    with pytest.raises(DomainError):
        await fut
    assert "0 threads" in repr(executor)


def test_process_executor():
    executor = AsyncProcessPoolExecutor(1)
    assert asyncio.run(executor.run(scaled, 4, factor=0.5)) == 2.0
    assert repr(executor).endswith("[1 processes]>")
    executor.shutdown()


def test_evaluate_grid():
    jobs = [(ParamB(0.8, 2.0), 5, x) for x in (-2.0, 0.0, 3.5)]
    expected = [crr_eval_recurrence(*job) for job in jobs]
    assert evaluate_grid(crr_eval_recurrence, jobs) == expected
    executor = AsyncThreadPoolExecutor(3)
    assert evaluate_grid(crr_eval_recurrence, iter(jobs), executor) == expected
    executor.shutdown()


@pytest.mark.asyncio_cooperative
async def test_evaluate_grid_inside_running_loop():
    jobs = [(ParamB(1.2, 0.5), 4, 0.25 * k) for k in range(12)]
    executor = AsyncThreadPoolExecutor(2)
    expected = [crr_eval_recurrence(*job) for job in jobs]
    assert evaluate_grid(crr_eval_recurrence, jobs, executor) == expected
    assert evaluate_grid(crr_eval_recurrence, [], executor) == []
    executor.shutdown()


def test_make_executor():
    assert isinstance(config.make_executor("Threads", 0), AsyncThreadPoolExecutor)
    assert isinstance(config.make_executor("p", 0), AsyncProcessPoolExecutor)
    with pytest.raises(ValueError, match="CRR_EXECUTOR_TYPE"):
        config.make_executor("greenlets", 2)


def test_default_executor_is_synchronous():
    assert config.get_default_executor().sync_mode
    assert config.get_default_executor() is config.get_default_executor()
