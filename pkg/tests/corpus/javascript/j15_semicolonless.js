const a = 1
let b = 2
function act() {
  return a + b
}
const after = act()
