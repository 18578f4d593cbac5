"""Run every docstring example in the package as a test."""

import doctest
import importlib

import pytest

MODULES = [
    "pipedreams.perm",
    "pipedreams.poly",
    "pipedreams.pipedream",
    "pipedreams.bumpless",
    "pipedreams.bijection",
    "pipedreams.monk",
    "pipedreams.verify",
    "pipedreams.render",
    "pipedreams.cli",
]


@pytest.mark.parametrize("name", MODULES)
def test_module_doctests(name):
    module = importlib.import_module(name)
    result = doctest.testmod(module, optionflags=doctest.NORMALIZE_WHITESPACE)
    assert result.failed == 0
