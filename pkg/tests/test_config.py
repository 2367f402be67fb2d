"""Tests for settings and the worker pool."""

import numpy as np
import pytest

from config import Settings, get_settings
from workers import map_chunks


@pytest.fixture
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


class TestSettings:
    """Tests for environment-driven settings."""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("WANDERING_LAB_THREADS", raising=False)
        settings = Settings(_env_file=None)
        assert settings.cauliflower_max_iter == 5000
        assert settings.explore_radius == 1.0
        assert settings.worker_count >= 1

    def test_env_override(self, monkeypatch, fresh_settings):
        monkeypatch.setenv("WANDERING_LAB_THREADS", "3")
        monkeypatch.setenv("WANDERING_LAB_WANDERING_MAX_STEPS", "250")
        settings = get_settings()
        assert settings.worker_count == 3
        assert settings.wandering_max_steps == 250


class TestMapChunks:
    """Tests for the ordered thread fan-out."""

    def test_order_preserved(self):
        values = np.arange(20000)
        assert np.array_equal(map_chunks(lambda chunk: chunk * 2, values, 4), values * 2)

    def test_worker_count_irrelevant(self):
        values = np.linspace(0, 1, 33333)
        assert np.array_equal(map_chunks(np.sqrt, values, 1), map_chunks(np.sqrt, values, 7))
