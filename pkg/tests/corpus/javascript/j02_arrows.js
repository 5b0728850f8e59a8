const double = (x) => x * 2;
const tagged = (name) => ({ name });
items.forEach((item) => {
  process(item);
});
const pipeline = (a) => (b) => a + b;
