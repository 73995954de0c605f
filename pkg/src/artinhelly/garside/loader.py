import json
from pathlib import Path

import numpy as np
from loguru import logger
from pydantic import ValidationError

from ..errors import InputError, StructureViolation
from ..formats.models import GarsideStructureFile
from .structure import GarsideStructure


def structure_from_model(model: GarsideStructureFile) -> GarsideStructure:
    index = {name: i for i, name in enumerate(model.simples)}
    if len(index) != len(model.simples):
        raise StructureViolation("distinct simple names")
    for name in [*model.atoms, model.delta]:
        if name not in index:
            raise StructureViolation("atoms and delta are simples", f"unknown simple '{name}'")
    size = len(model.simples)
    product = np.full((size, size), -1, dtype=np.int32)
    for i, j, k in model.product:
        if not (0 <= i < size and 0 <= j < size and -1 <= k < size):
            raise StructureViolation("product entries index simples", f"[{i}, {j}, {k}]")
        product[i, j] = k
    return GarsideStructure(
        names=model.simples,
        atoms=[index[a] for a in model.atoms],
        delta=index[model.delta],
        product=product,
    )


def structure_from_file(path: Path | str) -> GarsideStructure:
    try:
        model = GarsideStructureFile.model_validate_json(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValidationError, ValueError) as e:
        raise InputError(f"cannot read Garside structure {path}: {e}") from e
    structure = structure_from_model(model)
    logger.info(f"Loaded Garside structure with {structure.size} simples from {path}")
    return structure


def structure_to_model(gs: GarsideStructure) -> GarsideStructureFile:
    defined = np.argwhere(gs.product >= 0)
    return GarsideStructureFile(
        simples=list(gs.names),
        atoms=[gs.names[a] for a in gs.atoms],
        delta=gs.names[gs.delta],
        product=[(int(i), int(j), int(gs.product[i, j])) for i, j in defined],
    )


def structure_to_file(gs: GarsideStructure, path: Path | str) -> None:
    Path(path).write_text(
        json.dumps(structure_to_model(gs).model_dump(), indent=2) + "\n", encoding="utf-8"
    )
