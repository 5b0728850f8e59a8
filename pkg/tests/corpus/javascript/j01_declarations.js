const base = 1;
let counter = 0;
var legacy = "old";
const first = 1, second = 2;
for (let i = 0; i < 3; i++) {
  counter += i;
}
for (const key of keys) {
  use(key);
}
