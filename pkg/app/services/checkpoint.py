from __future__ import annotations

import json
import logging
import os
from pathlib import Path
from typing import Optional, Union

from pydantic import ValidationError

from app.core.errors import CheckpointMismatch
from app.models.congruence import CongruenceSpec
from app.models.report import CheckpointState

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def save_checkpoint(path: PathLike, state: CheckpointState) -> None:
    """Write the state atomically: temp file in the same directory, then replace."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    tmp = target.with_name(target.name + ".tmp")
    tmp.write_text(state.model_dump_json(indent=2), encoding="utf-8")
    os.replace(tmp, target)
    logger.info(
        "checkpoint written to %s (%d subtrees done, %d partial solutions)",
        target,
        len(state.completed_subtrees),
        len(state.partial_solutions),
    )


def load_checkpoint(path: PathLike) -> CheckpointState:
    source = Path(path)
    if not source.is_file():
        raise CheckpointMismatch(f"checkpoint file {source} does not exist")
    try:
        state = CheckpointState.model_validate(json.loads(source.read_text(encoding="utf-8")))
    except (json.JSONDecodeError, ValidationError) as e:
        raise CheckpointMismatch(f"checkpoint file {source} is malformed: {e}") from e
    logger.info("resuming from %s (%d subtrees done)", source, len(state.completed_subtrees))
    return state


def check_compatible(state: CheckpointState, spec: CongruenceSpec, bound: int, depth: int) -> None:
    if state.spec != spec.as_dict():
        raise CheckpointMismatch(f"checkpoint is for (r,m)=({state.spec.get('r')},{state.spec.get('m')}), run is {spec.label}")
    if state.bound != bound:
        raise CheckpointMismatch(f"checkpoint bound {state.bound} differs from run bound {bound}")
    if state.depth != depth:
        raise CheckpointMismatch(f"checkpoint split depth {state.depth} differs from run depth {depth}")


def new_state(spec: CongruenceSpec, bound: int, depth: int, exclusions: Optional[list] = None) -> CheckpointState:
    return CheckpointState(spec=spec.as_dict(), bound=bound, depth=depth, exclusions=list(exclusions or []))
