"""Classical occurrence-counting scan, used as ground truth for the common set."""

from __future__ import annotations

from dataclasses import dataclass, field

from .oracle import ProblemInstance


@dataclass
class OccurrenceTable:
    counts: dict[int, int] = field(default_factory=dict)
    total_queries: int = 0


def occurrence_table(instance: ProblemInstance) -> OccurrenceTable:
    """Query every entry of every database once and tally the hits."""
    table = OccurrenceTable()
    for box in instance.black_boxes:
        for x in range(box.size):
            table.total_queries += 1
            if box(x):
                table.counts[x] = table.counts.get(x, 0) + 1
    return table


def classical_common_entries(instance: ProblemInstance) -> tuple[set[int], int]:
    table = occurrence_table(instance)
    common = {x for x, c in table.counts.items() if c == instance.kappa}
    return common, table.total_queries
