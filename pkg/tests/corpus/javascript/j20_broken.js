function oops( {
  const x = [1, 2;
}
let fine = 7;
