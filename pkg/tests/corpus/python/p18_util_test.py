def check_invariants(obj):
    assert obj is not None
    return True
