"""File handling and worker pools for the command line."""
from __future__ import annotations

from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
import logging
from pathlib import Path
import sys
from typing import IO, Any, Optional, TypeVar

from pydantic import ValidationError

from wafix.exceptions import RecordFileError
from wafix.model import BaseModel, read_records

_LOGGER = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")
T_Model = TypeVar("T_Model", bound=BaseModel)

CHUNK_SIZE = 64


@contextmanager
def open_output(path: Optional[Path]) -> Iterator[IO[str]]:
    """Open an output file, or use standard output when no path is given."""
    if path is None:
        yield sys.stdout
        sys.stdout.flush()
        return
    with path.open("w", encoding="utf-8", newline="\n") as stream:
        yield stream


def read_model_file(path: Path, model: type[T_Model]) -> list[T_Model]:
    """Read a line-delimited record file of one model."""
    try:
        with path.open(encoding="utf-8") as stream:
            records = list(read_records(stream, model))
    except OSError as err:
        raise RecordFileError(f"cannot read {path}: {err}") from err
    except ValidationError as err:
        raise RecordFileError(
            f"invalid {model.__name__} record in {path}: {err}"
        ) from err
    _LOGGER.debug("read %s %s records from %s", len(records), model.__name__, path)
    return records


def print_summary(**counts: Any) -> None:
    """Write a ``key=value`` summary line to standard error."""
    line = " ".join(f"{key}={value}" for key, value in counts.items())
    print(line, file=sys.stderr)


def parallel_map(
    func: Callable[[T], R],
    items: Sequence[T],
    jobs: int = 1,
    initializer: Optional[Callable[..., None]] = None,
    initargs: tuple[Any, ...] = (),
) -> list[R]:
    """Map func over items in input order, with a process pool when jobs > 1."""
    if jobs <= 1 or len(items) <= 1:
        if initializer is not None:
            initializer(*initargs)
        return [func(item) for item in items]
    _LOGGER.debug("mapping %s items over %s processes", len(items), jobs)
    with ProcessPoolExecutor(
        max_workers=jobs, initializer=initializer, initargs=initargs
    ) as executor:
        return list(executor.map(func, items, chunksize=CHUNK_SIZE))
