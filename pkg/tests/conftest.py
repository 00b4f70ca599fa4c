import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    for name, module in sys.modules.items():
        if name.endswith("test_acceptance") and hasattr(module, "RESULTS"):
            lines = module.RESULTS
            if lines:
                terminalreporter.section("acceptance criteria")
                for line in lines:
                    terminalreporter.write_line(line)
            break
