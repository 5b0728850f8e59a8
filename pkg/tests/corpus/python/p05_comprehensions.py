squares = [x * x for x in range(10)]
lookup = {n: len(n) for n in words}
seen = {c for c in text}
lazy = (y + 1 for y in items)
filtered = [x for x in data if x > 0]
