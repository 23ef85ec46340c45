from quandle_closure.core.enumerate import enumerate_quandles

E_TABLE = ((0, 0, 1), (1, 1, 0), (2, 2, 2))
E_TEXT = "3\n0 0 1\n1 1 0\n2 2 2\n"
R3_TEXT = "3\n0 2 1\n2 1 0\n1 0 2\n"

_ENUMERATED = {}


def quandles_of_order(n):
    """Enumerated isomorphism classes, shared across the session."""
    if n not in _ENUMERATED:
        _ENUMERATED[n] = enumerate_quandles(n)
    return _ENUMERATED[n]


def quandles_up_to(max_order, min_order=1):
    return [q for n in range(min_order, max_order + 1) for q in quandles_of_order(n)]
