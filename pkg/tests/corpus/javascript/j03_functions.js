function greet(name) {
  return "hi " + name;
}

const helper = function (x) {
  return x - 1;
};

function* pairs(list) {
  for (const item of list) {
    yield [item, item];
  }
}

const counterGen = function* (n) {
  yield n;
};
