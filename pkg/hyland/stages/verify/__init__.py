from .main import main, exit_status, DEFAULT_SUITES
