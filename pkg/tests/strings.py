"""Random string and update factories shared by the test suite."""

import numpy as np

from src.core.data_models import DynamicString, StringRole, Update


def random_symbols(rng, length, alphabet, wildcard_rate=0.2):
    """Symbols valid for `alphabet`; wildcards appear at `wildcard_rate` when enabled"""
    if alphabet.wildcard_enabled:
        values = rng.integers(1, alphabet.size + 1, size=length)
        values[rng.random(length) < wildcard_rate] = 0
        return values.astype(np.int64)
    return rng.integers(0, alphabet.size, size=length).astype(np.int64)


def random_pair(rng, m, n, alphabet):
    pattern = DynamicString(random_symbols(rng, m, alphabet), alphabet, StringRole.PATTERN)
    text = DynamicString(random_symbols(rng, n, alphabet), alphabet, StringRole.TEXT)
    return pattern, text


def random_update(rng, m, n, alphabet, roles=(StringRole.PATTERN, StringRole.TEXT)):
    role = roles[int(rng.integers(0, len(roles)))]
    length = m if role is StringRole.PATTERN else n
    position = int(rng.integers(1, length + 1))
    symbol = int(random_symbols(rng, 1, alphabet)[0])
    return Update(role, position, symbol)


def apply_to_mirror(mirror, u):
    """Keep plain numpy copies in step with a structure under test"""
    mirror[u.target][u.position - 1] = u.new_symbol
