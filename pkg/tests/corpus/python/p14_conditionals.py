if mode == "fast":
    speed = 10
elif mode == "slow":
    speed = 1
else:
    speed = 5

label = "big" if speed > 5 else "small"
