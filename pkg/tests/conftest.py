import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make `import oracles` work

from sakubun.automata import register_hook, unregister_hook


@pytest.fixture
def pop_last_hook():
    """Custom hook used by the balanced-delimiter automaton: pops the stack
    and admits the shift only when that pop empties it. Registered through
    the public extension API and cleaned up afterwards."""

    def pop_last(ctx, token):
        stack = ctx.stack()
        if len(stack) != 1:
            return False
        stack.pop()
        return True

    register_hook("pop-last", pop_last)
    yield "pop-last"
    unregister_hook("pop-last")
