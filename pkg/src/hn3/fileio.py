"""Reading and writing structure files.

A structure file is a JSON object with four keys:

* ``dimension``: the frame size n;
* ``brackets``: a list of ``{"i", "j", "k", "value"}`` entries giving the
  nonzero structure constants ``c^k_ij`` (1-based; an entry's (j, i)
  partner is NOT implied and must be listed too);
* ``metric``: an n x n array of scalars;
* ``structures``: three objects ``{"alpha", "epsilon", "phi", "xi",
  "eta"}`` with alpha in {1, 2, 3} and epsilon the fixed character of
  that slot.

Scalars are strings ``"p/q"`` (or ``"p"``) or plain JSON integers; floats
are rejected to keep everything exact.  ``load_structure`` can run the
validators on the parsed data; schema problems and mathematical
invalidity are distinct failure kinds.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .errors import StructureFileError, ValidationError
from .linalg import Matrix, Vector
from .liealg import LieAlgebra, MetricLieAlgebra, validate_lie_algebra, validate_metric
from .rational import as_scalar, format_scalar
from .reporting import Report
from .structures import (
    EPSILONS,
    AlmostContactStructure,
    HN3Manifold,
    validate_ac3,
    validate_hn_metric,
)
from .tensor import covector


def _scalar_at(value, path: str) -> Fraction:
    if isinstance(value, float):
        raise StructureFileError("floats are not exact; write \"p/q\"", path)
    try:
        return as_scalar(value)
    except (TypeError, ValueError) as exc:
        raise StructureFileError(str(exc), path) from exc


def _index_at(value, dim: int, path: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise StructureFileError("index must be an integer", path)
    if not 1 <= value <= dim:
        raise StructureFileError(f"index {value} out of range 1..{dim}", path)
    return value


def _matrix_at(data, dim: int, path: str) -> Matrix:
    if not isinstance(data, list) or len(data) != dim:
        raise StructureFileError(f"expected {dim} rows", path)
    rows = []
    for r, row in enumerate(data):
        if not isinstance(row, list) or len(row) != dim:
            raise StructureFileError(f"expected {dim} entries", f"{path}/{r}")
        rows.append([_scalar_at(v, f"{path}/{r}/{c}") for c, v in enumerate(row)])
    return Matrix(rows)


def _vector_at(data, dim: int, path: str) -> list[Fraction]:
    if not isinstance(data, list) or len(data) != dim:
        raise StructureFileError(f"expected {dim} entries", path)
    return [_scalar_at(v, f"{path}/{i}") for i, v in enumerate(data)]


def parse_structure(data: dict) -> HN3Manifold:
    """Build the manifold from decoded JSON, checking the schema as it goes."""
    if not isinstance(data, dict):
        raise StructureFileError("top level must be an object", "/")
    for key in ("dimension", "brackets", "metric", "structures"):
        if key not in data:
            raise StructureFileError(f"missing key {key!r}", "/")
    dim = data["dimension"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise StructureFileError("dimension must be a positive integer", "/dimension")

    entries: dict[tuple[int, int, int], Fraction] = {}
    if not isinstance(data["brackets"], list):
        raise StructureFileError("brackets must be a list", "/brackets")
    for pos, entry in enumerate(data["brackets"]):
        path = f"/brackets/{pos}"
        if not isinstance(entry, dict):
            raise StructureFileError("entry must be an object", path)
        try:
            i = _index_at(entry["i"], dim, f"{path}/i")
            j = _index_at(entry["j"], dim, f"{path}/j")
            k = _index_at(entry["k"], dim, f"{path}/k")
            value = _scalar_at(entry["value"], f"{path}/value")
        except KeyError as exc:
            raise StructureFileError(f"missing key {exc.args[0]!r}", path) from exc
        key = (i, j, k)
        if key in entries and entries[key] != value:
            raise StructureFileError(
                f"conflicting duplicate for bracket ({i},{j},{k})", path
            )
        entries[key] = value
        partner = (j, i, k)
        if partner in entries and entries[partner] != -value:
            raise StructureFileError(
                f"brackets ({i},{j},{k}) and ({j},{i},{k}) are not antisymmetric "
                "partners",
                path,
            )
    algebra = LieAlgebra.from_nonzero(dim, entries)

    metric = _matrix_at(data["metric"], dim, "/metric")

    if not isinstance(data["structures"], list) or len(data["structures"]) != 3:
        raise StructureFileError("exactly three structures required", "/structures")
    slots: dict[int, AlmostContactStructure] = {}
    for pos, s in enumerate(data["structures"]):
        path = f"/structures/{pos}"
        if not isinstance(s, dict):
            raise StructureFileError("structure must be an object", path)
        for key in ("alpha", "epsilon", "phi", "xi", "eta"):
            if key not in s:
                raise StructureFileError(f"missing key {key!r}", path)
        alpha = s["alpha"]
        if alpha not in (1, 2, 3):
            raise StructureFileError("alpha must be 1, 2 or 3", f"{path}/alpha")
        if alpha in slots:
            raise StructureFileError(f"duplicate structure {alpha}", f"{path}/alpha")
        epsilon = s["epsilon"]
        if epsilon not in (1, -1):
            raise StructureFileError("epsilon must be 1 or -1", f"{path}/epsilon")
        phi = _matrix_at(s["phi"], dim, f"{path}/phi")
        xi = Vector(_vector_at(s["xi"], dim, f"{path}/xi"))
        eta = covector(_vector_at(s["eta"], dim, f"{path}/eta"))
        slots[alpha] = AlmostContactStructure(phi, xi, eta, epsilon)
    # the character pattern is fixed; a mismatch is invalid data, not bad syntax
    return HN3Manifold(
        MetricLieAlgebra(algebra, metric), (slots[1], slots[2], slots[3])
    )


def validation_reports(h: HN3Manifold) -> list[Report]:
    """The three validators every structure must pass, in checking order."""
    return [
        validate_lie_algebra(h.mla.algebra),
        validate_metric(h.mla),
        validate_ac3(h),
        validate_hn_metric(h),
    ]


def load_structure(path: str | Path, validate: bool = True) -> HN3Manifold:
    """Parse a structure file; with ``validate`` re-derive all its invariants."""
    raw = Path(path).read_text()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise StructureFileError(f"invalid JSON: {exc}", "/") from exc
    h = parse_structure(data)
    if validate:
        for report in validation_reports(h):
            if not report.passed:
                first = report.violations[0].render()
                raise ValidationError(
                    f"{report.check}: {first} "
                    f"({len(report.violations)} violations in total)"
                )
    return h


def structure_to_json(h: HN3Manifold) -> dict:
    """Serialize; ``parse_structure`` of the result rebuilds an equal manifold."""
    brackets = [
        {"i": i + 1, "j": j + 1, "k": k + 1, "value": format_scalar(v)}
        for (i, j, k), v in h.mla.algebra.bracket.nonzero()
    ]
    n = h.dim
    return {
        "dimension": n,
        "brackets": brackets,
        "metric": [[format_scalar(h.metric[i, j]) for j in range(n)] for i in range(n)],
        "structures": [
            {
                "alpha": a,
                "epsilon": EPSILONS[a - 1],
                "phi": [
                    [format_scalar(h.phi(a)[i, j]) for j in range(n)] for i in range(n)
                ],
                "xi": [format_scalar(x) for x in h.xi(a)],
                "eta": [format_scalar(h.eta(a)[i]) for i in range(n)],
            }
            for a in (1, 2, 3)
        ],
    }


def dump_structure(h: HN3Manifold, path: str | Path) -> None:
    Path(path).write_text(json.dumps(structure_to_json(h), indent=2) + "\n")
