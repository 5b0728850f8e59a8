def kind_of(shape):
    match shape:
        case {"type": "circle"}:
            return "round"
        case [x, y]:
            return "pair"
        case _:
            return "other"
