"""Published f-vectors of the RP^d triangulations, kept in data/reference_fvectors.json."""
import os
from typing import Optional, Sequence, Tuple

import pandas as pd

from utils.cache import memoize


@memoize
def load_reference() -> pd.DataFrame:
    """Reference rows indexed by d, with the f-vector stored as a tuple."""
    base_dir = os.path.dirname(os.path.abspath(__file__))
    path = os.path.normpath(os.path.join(base_dir, "..", "data", "reference_fvectors.json"))
    table = pd.read_json(path)
    table["f"] = table["f"].apply(lambda f: tuple(int(x) for x in f))
    return table.set_index("d")


def reference_fvector(d: int) -> Optional[Tuple[int, ...]]:
    table = load_reference()
    if d not in table.index:
        return None
    return table.at[d, "f"]


def check_fvector_table(fvector: Sequence[int], d: int) -> str:
    """'match', 'mismatch' or 'absent' when the table has no row for d."""
    expected = reference_fvector(d)
    if expected is None:
        return "absent"
    return "match" if tuple(fvector) == expected else "mismatch"
