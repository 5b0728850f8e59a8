function outer() {
  const inner = () => {
    const deepest = function () {
      return 3;
    };
    return deepest();
  };
  return inner;
}
