"""Shared models for wafix."""
from __future__ import annotations

import logging
from typing import IO, Iterable, Iterator, TypeVar

from pydantic import BaseModel as PydanticBaseModel, ConfigDict

_LOGGER = logging.getLogger(__name__)

T_Model = TypeVar("T_Model", bound="BaseModel")


class BaseModel(PydanticBaseModel):
    """Base model for wafix models."""

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        extra="ignore",
        use_enum_values=False,
    )

    def to_record(self) -> str:
        """Serialize as one line of a line-delimited record file."""
        return self.model_dump_json(exclude_none=True)


def write_records(stream: IO[str], models: Iterable[BaseModel]) -> int:
    """Write models as line-delimited records and return how many were written."""
    count = 0
    for model in models:
        stream.write(model.to_record())
        stream.write("\n")
        count += 1
    return count


def read_records(stream: IO[str], model: type[T_Model]) -> Iterator[T_Model]:
    """Read line-delimited records, skipping blank lines."""
    for line_number, line in enumerate(stream, start=1):
        if not line.strip():
            continue
        _LOGGER.debug("reading %s record from line %s", model.__name__, line_number)
        yield model.model_validate_json(line)
