"""Instance files and random instance generation.

An instance file is a JSON document::

    {
      "n": 2,
      "kappa": 2,
      "databases": [
        {"label": "A", "solutions": [1, 3]},
        {"label": "B", "solutions": [2, 3]}
      ]
    }

``kappa`` is optional; when present it must equal the number of databases.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .errors import InstanceParseError
from .oracle import BlackBox, ProblemInstance


def instance_from_dict(doc: Any) -> ProblemInstance:
    if not isinstance(doc, dict):
        raise InstanceParseError("instance document must be a JSON object")
    try:
        n = doc["n"]
        dbs = doc["databases"]
    except KeyError as exc:
        raise InstanceParseError(f"missing field {exc.args[0]!r}") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise InstanceParseError(f"'n' must be an integer, got {n!r}")
    if not isinstance(dbs, list):
        raise InstanceParseError("'databases' must be a list")
    kappa = doc.get("kappa", len(dbs))
    if kappa != len(dbs):
        raise InstanceParseError(f"kappa={kappa} but {len(dbs)} databases listed")
    boxes = []
    for j, db in enumerate(dbs):
        if not isinstance(db, dict) or "solutions" not in db:
            raise InstanceParseError(f"database {j} must be an object with 'solutions'")
        sols = db["solutions"]
        if not isinstance(sols, list) or not all(
            isinstance(s, int) and not isinstance(s, bool) for s in sols
        ):
            raise InstanceParseError(f"database {j}: 'solutions' must be a list of integers")
        label = str(db.get("label", f"L{j}"))
        try:
            boxes.append(BlackBox(n, sols, label))
        except ValueError as exc:
            raise InstanceParseError(str(exc)) from None
    try:
        return ProblemInstance(n, boxes)
    except ValueError as exc:
        raise InstanceParseError(str(exc)) from None


def instance_to_dict(instance: ProblemInstance) -> dict[str, Any]:
    return {
        "n": instance.n,
        "kappa": instance.kappa,
        "databases": [
            {"label": b.label, "solutions": sorted(b.solutions)} for b in instance.black_boxes
        ],
    }


def load_instance(path: str | Path) -> ProblemInstance:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceParseError(f"cannot read {path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceParseError(f"{path}: {exc}") from None
    return instance_from_dict(doc)


def save_instance(instance: ProblemInstance, path: str | Path) -> None:
    Path(path).write_text(json.dumps(instance_to_dict(instance), indent=2) + "\n")


def random_instance(n: int, kappa: int, m_c: int, rng: np.random.Generator,
                    extra: float = 0.5) -> ProblemInstance:
    """Random instance whose common set has exactly ``m_c`` entries.

    Each database holds the common entries plus each other entry with
    probability ``extra``; every non-common entry is then dropped from one
    randomly chosen database so it cannot be common by accident.
    """
    N = 1 << n
    if not 0 <= m_c <= N:
        raise ValueError(f"m_c={m_c} outside 0..{N}")
    common = rng.choice(N, size=m_c, replace=False)
    member = rng.random((kappa, N)) < extra
    member[:, common] = True
    others = np.setdiff1d(np.arange(N), common)
    member[rng.integers(0, kappa, size=others.size), others] = False
    return ProblemInstance.from_solution_sets(n, [np.flatnonzero(row) for row in member])
