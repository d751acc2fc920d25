import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--runlong", action="store_true", default=False,
        help="run enumerations past the desk-scale budget (minutes to hours)")


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "longrun: enumeration past the desk-scale budget, needs --runlong")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runlong"):
        return
    skip = pytest.mark.skip(reason="needs --runlong")
    for item in items:
        if "longrun" in item.keywords:
            item.add_marker(skip)
