for item in items:
    print(item)

for i in range(3):
    for j in range(3):
        pass

while running:
    running = step()
