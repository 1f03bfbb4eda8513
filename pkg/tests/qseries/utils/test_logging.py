import logging

from qseries.utils.logging import LoggableMixin


class _Loggable(LoggableMixin):
    pass


def test_child_logger():
    parent = logging.getLogger('qseries.verifier')
    assert _Loggable('thm-a', parent).logger.name == 'qseries.verifier.thm-a'
    assert _Loggable(None, parent).logger is parent


def test_log_levels(caplog):
    loggable = _Loggable('p33-a', logging.getLogger('qseries.verifier'))
    with caplog.at_level(logging.DEBUG, logger='qseries.verifier.p33-a'):
        loggable.debug('sample %d rejected', 3)
        loggable.warning('sample %d failed', 4)

    assert [r.getMessage() for r in caplog.records] == ['sample 3 rejected', 'sample 4 failed']
    assert caplog.records[1].levelno == logging.WARNING
