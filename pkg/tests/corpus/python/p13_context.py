with open("data.txt") as fh:
    body = fh.read()

with lock, timer() as t:
    work(t)
