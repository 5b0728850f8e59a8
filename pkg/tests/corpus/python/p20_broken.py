def good():
    return 1

def broken(:
    oops ===

trailing = [1, 2]
