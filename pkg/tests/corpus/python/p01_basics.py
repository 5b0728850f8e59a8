greeting = "hello"
count = 3
total = count + 1
