const handler = function (x: number): number {
  return x + 1;
};

function* range(limit: number) {
  yield limit;
}

const lazy = function* () {
  yield 1;
};

const Impl = class {
  run(): void {}
};
