import pytest

from app.core.config import settings
from app.core.errors import PreconditionViolated
from app.services.parallel import ordered_map, resolve_workers


def test_resolve_workers(monkeypatch):
    monkeypatch.setattr(settings, "STERN_WORKERS", 3)
    assert resolve_workers(None) == 3
    assert resolve_workers(1) == 1
    with pytest.raises(PreconditionViolated):
        resolve_workers(0)


def test_ordered_map_keeps_input_order():
    items = list(range(-20, 20))
    assert ordered_map(abs, items, workers=1) == [abs(x) for x in items]
    assert ordered_map(abs, items, workers=2) == [abs(x) for x in items]
