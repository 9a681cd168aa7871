import logging

from spikyball.utils.logging import (
    ROOT_LOGGER,
    disable_all_logging,
    disable_module_logging,
    enable_all_logging,
    enable_module_logging,
    set_module_logging,
    setup_logging,
)


class TestSetupLogging:
    def test_single_stderr_handler(self):
        setup_logging(level="DEBUG")
        setup_logging(level="INFO")
        logger = logging.getLogger(ROOT_LOGGER)
        assert len(logger.handlers) == 1
        assert logger.level == logging.INFO
        assert not logger.propagate

    def test_log_file(self, tmp_path):
        log_file = tmp_path / "logs" / "run.log"
        setup_logging(level="INFO", log_file=log_file)
        logging.getLogger("spikyball.coverings").info("covering built")
        for handler in logging.getLogger(ROOT_LOGGER).handlers:
            handler.flush()
        assert "covering built" in log_file.read_text()

    def test_module_levels(self):
        setup_logging(level="WARNING", module_levels={"spikyball.bounds": "DEBUG"})
        try:
            assert logging.getLogger("spikyball.bounds").level == logging.DEBUG
        finally:
            logging.getLogger("spikyball.bounds").setLevel(logging.NOTSET)

    def test_level_from_environment(self, monkeypatch):
        monkeypatch.setenv("SPIKYBALL_LOG_LEVEL", "warning")
        logger = setup_logging()
        assert logger.level == logging.WARNING

    def test_disabled(self):
        setup_logging(disabled=True)
        assert logging.getLogger(ROOT_LOGGER).disabled


class TestToggles:
    def test_all(self):
        disable_all_logging()
        assert logging.getLogger(ROOT_LOGGER).disabled
        enable_all_logging()
        assert not logging.getLogger(ROOT_LOGGER).disabled

    def test_module(self, caplog):
        name = "spikyball.piercing.caps"
        disable_module_logging(name)
        try:
            with caplog.at_level(logging.INFO):
                logging.getLogger(name).info("hidden")
            assert "hidden" not in caplog.text
        finally:
            enable_module_logging(name)
        assert not logging.getLogger(name).disabled

    def test_set_module_logging(self):
        name = "spikyball.bounds.omega"
        set_module_logging(name, False)
        assert logging.getLogger(name).disabled
        set_module_logging(name, True)
        assert not logging.getLogger(name).disabled
