interface Dangling {
  name: string
function rescue(): number {
  return 42;
}
