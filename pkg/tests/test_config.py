import pytest

from spikyball.geometry import Tolerance
from spikyball.utils.config import Settings, default_tolerance, get_settings

ENV_VARS = [
    "SPIKYBALL_EPS_PREDICATE",
    "SPIKYBALL_EPS_GEOMETRY",
    "SPIKYBALL_SEED",
    "SPIKYBALL_RETRY_BUDGET",
    "SPIKYBALL_LOG_LEVEL",
]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch, tmp_path):
    for name in ENV_VARS:
        monkeypatch.delenv(name, raising=False)
    # Keep a developer's .env out of the tests
    monkeypatch.chdir(tmp_path)


class TestSettings:
    def test_defaults(self):
        assert get_settings() == Settings()
        assert default_tolerance() == Tolerance()

    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("SPIKYBALL_SEED", "99")
        monkeypatch.setenv("SPIKYBALL_EPS_GEOMETRY", "1e-6")
        monkeypatch.setenv("SPIKYBALL_LOG_LEVEL", "debug")
        settings = get_settings()
        assert settings.seed == 99
        assert settings.eps_geometry == 1e-6
        assert settings.log_level == "DEBUG"
        assert default_tolerance().eps_geometry == 1e-6

    def test_blank_value_uses_default(self, monkeypatch):
        monkeypatch.setenv("SPIKYBALL_RETRY_BUDGET", "  ")
        assert get_settings().retry_budget == Settings().retry_budget

    def test_invalid_value(self, monkeypatch):
        monkeypatch.setenv("SPIKYBALL_SEED", "seven")
        with pytest.raises(ValueError, match="SPIKYBALL_SEED"):
            get_settings()

    def test_retry_budget_positive(self, monkeypatch):
        monkeypatch.setenv("SPIKYBALL_RETRY_BUDGET", "0")
        with pytest.raises(ValueError):
            get_settings()

    def test_dotenv_file(self, monkeypatch, tmp_path):
        # Recorded so the value exported from .env is removed afterwards
        monkeypatch.setenv("SPIKYBALL_SEED", "1")
        monkeypatch.delenv("SPIKYBALL_SEED")
        (tmp_path / ".env").write_text("SPIKYBALL_SEED=123\n")
        assert get_settings().seed == 123

    def test_environment_wins_over_dotenv(self, monkeypatch, tmp_path):
        (tmp_path / ".env").write_text("SPIKYBALL_SEED=123\n")
        monkeypatch.setenv("SPIKYBALL_SEED", "8")
        assert get_settings().seed == 8
