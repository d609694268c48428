"""
Reading and writing the JSON frame file format.
"""

import json
import logging
import os
from typing import Any, Dict, Union

import numpy as np
from pydantic import ValidationError

from ...errors import FrameValidationError
from ...models.frame import FieldTag, FrameFile, SampledFrame
from ...models.measure import QuadratureMeasure

logger = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]


def _reject_constant(token: str):
    raise FrameValidationError(f"non-finite value '{token}' in frame file")


class FrameStorage:
    """
    Service for frame files.

    Files look like
        { "field": "C"|"R", "dim": d, "atomic": bool,
          "nodes": [ { "weight": w, "vector": [[re, im], …] }, … ] }
    Real-field files may use bare reals for vector entries.
    """

    def __init__(self, indent: int = 2):
        """
        Initialize the storage service.

        Args:
            indent: JSON indentation used when writing
        """
        self.indent = indent
        self.logger = logging.getLogger(__name__)

    def frame_from_document(self, document: Dict[str, Any]) -> SampledFrame:
        """
        Validate a decoded frame document and build the frame.

        Raises:
            FrameValidationError: On schema violations, wrong vector lengths,
                non-finite values or complex entries in a real file
        """
        try:
            parsed = FrameFile.model_validate(document)
        except ValidationError as e:
            first = e.errors()[0]
            where = ".".join(str(part) for part in first["loc"])
            raise FrameValidationError(f"invalid frame file at '{where}': {first['msg']}") from e

        rows = np.zeros((len(parsed.nodes), parsed.dim), dtype=complex)
        for index, node in enumerate(parsed.nodes):
            if len(node.vector) != parsed.dim:
                raise FrameValidationError(
                    f"node {index} has {len(node.vector)} entries, expected dim={parsed.dim}"
                )
            for k, entry in enumerate(node.vector):
                if isinstance(entry, list):
                    if len(entry) != 2:
                        raise FrameValidationError(f"node {index} entry {k} must be [re, im]")
                    rows[index, k] = complex(entry[0], entry[1])
                elif parsed.field is FieldTag.REAL:
                    rows[index, k] = float(entry)
                else:
                    raise FrameValidationError(
                        f"node {index} entry {k}: complex frame files need [re, im] pairs"
                    )

        weights = [node.weight for node in parsed.nodes]
        measure = QuadratureMeasure.create(np.arange(1, len(weights) + 1), weights, atomic=parsed.atomic)
        return SampledFrame.create(parsed.field, measure, rows)

    def frame_to_document(self, frame: SampledFrame) -> Dict[str, Any]:
        """Encode a frame; real frames are written with bare reals."""
        nodes = []
        for weight, row in zip(frame.weights, frame.vectors):
            if frame.field is FieldTag.REAL:
                vector = [float(x.real) for x in row]
            else:
                vector = [[float(x.real), float(x.imag)] for x in row]
            nodes.append({"weight": float(weight), "vector": vector})
        return {
            "field": frame.field.value,
            "dim": frame.dim,
            "atomic": frame.measure.atomic,
            "nodes": nodes,
        }

    def load_frame(self, path: PathLike) -> SampledFrame:
        """
        Load and validate a frame file.

        Args:
            path: Path to a UTF-8 JSON frame file

        Returns:
            SampledFrame

        Raises:
            FrameValidationError: If the file cannot be read or fails validation
        """
        self.logger.info(f"Loading frame file {path}")
        try:
            with open(path, "r", encoding="utf-8") as handle:
                document = json.load(handle, parse_constant=_reject_constant)
        except OSError as e:
            raise FrameValidationError(f"cannot read frame file {path}: {e}") from e
        except json.JSONDecodeError as e:
            raise FrameValidationError(f"frame file {path} is not valid JSON: {e}") from e
        if not isinstance(document, dict):
            raise FrameValidationError("frame file must contain a JSON object")
        frame = self.frame_from_document(document)
        self.logger.info(f"Loaded {frame.field.value}^{frame.dim} frame with {frame.size} nodes")
        return frame

    def save_frame(self, frame: SampledFrame, path: PathLike) -> None:
        """Write a frame file (UTF-8 JSON)."""
        document = self.frame_to_document(frame)
        with open(path, "w", encoding="utf-8") as handle:
            json.dump(document, handle, indent=self.indent)
            handle.write("\n")
        self.logger.info(f"Saved frame with {frame.size} nodes to {path}")


# Create a singleton instance
frame_storage = FrameStorage()


def load_frame(path: PathLike) -> SampledFrame:
    return frame_storage.load_frame(path)


def save_frame(frame: SampledFrame, path: PathLike) -> None:
    frame_storage.save_frame(frame, path)


def frame_from_document(document: Dict[str, Any]) -> SampledFrame:
    return frame_storage.frame_from_document(document)


def frame_to_document(frame: SampledFrame) -> Dict[str, Any]:
    return frame_storage.frame_to_document(frame)
