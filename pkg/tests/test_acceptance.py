"""One test per acceptance criterion, each at its stated tolerance.

The pass/fail line of every criterion is printed in the terminal summary.
"""

import pytest

from conftest import ACCEPTANCE_LINES
from rdenergy.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [num for num, _, _ in CRITERIA],
                         ids=[f"{num:02d}-{name.replace(' ', '_')}" for num, name, _ in CRITERIA])
def test_criterion(number, request):
    result = run_criterion(number)
    print(result.line())
    request.config.stash[ACCEPTANCE_LINES].append(result.line())
    assert result.passed, result.detail
