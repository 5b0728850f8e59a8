if (n := len(data)) > 3:
    head = data[0]
    tail = data[1:]
    step = data[::2]
matrix[0][1] = 9
args = fn(*items, **options)
