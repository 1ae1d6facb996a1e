import os

import pytest

from linkatlas import find_minimal_weak
from linkatlas.atlas import Atlas
from linkatlas.search import derive_minimal_strong

LONG_MODE = os.environ.get("LINKATLAS_LONG") == "1"

long_mode = pytest.mark.skipif(
    not LONG_MODE, reason="multi-hour n>=10 reproduction; set LINKATLAS_LONG=1"
)


@pytest.fixture(scope="session")
def weak_atlas7() -> Atlas:
    records = []
    for n in range(2, 8):
        records.extend(find_minimal_weak(n, mode="sieved"))
    return Atlas(records, meta={"kind": "weak", "complete_n": list(range(2, 8))})


@pytest.fixture(scope="session")
def weak_atlas9() -> Atlas:
    records = []
    for n in range(2, 10):
        records.extend(find_minimal_weak(n, mode="sieved"))
    return Atlas(records, meta={"kind": "weak", "complete_n": list(range(2, 10))})


@pytest.fixture(scope="session")
def strong_atlas9(weak_atlas9) -> Atlas:
    records = derive_minimal_strong(weak_atlas9.records())
    return Atlas(
        records,
        meta={"kind": "strong", "mode": "derived", "complete_n": sorted({r.n for r in records})},
    )
