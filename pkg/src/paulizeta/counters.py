from dataclasses import dataclass


@dataclass(frozen=True)
class OpCounters:
    """Snapshot of a pattern table's dictionary traffic.

    ``dict_updates`` grows by ``2**w`` per inserted weight-``w`` string and
    ``dict_lookups`` by ``3**w`` per weight-``w`` query.
    """

    dict_updates: int = 0
    dict_lookups: int = 0

    def __sub__(self, other):
        return OpCounters(
            self.dict_updates - other.dict_updates,
            self.dict_lookups - other.dict_lookups,
        )
