if (ready) {
  start();
} else if (waiting) {
  wait();
} else {
  stop();
}
const label = count > 1 ? "many" : "one";
