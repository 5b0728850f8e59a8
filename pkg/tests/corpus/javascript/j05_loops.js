while (pending.length) {
  pending.pop();
}

do {
  tick();
} while (clock.running);

for (let i = 0; i < 10; i += 1) {
  step(i);
}

for (const k in table) {
  visit(k);
}
