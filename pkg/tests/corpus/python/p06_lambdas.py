double = lambda x: x * 2
key_fn = lambda item: item.name
