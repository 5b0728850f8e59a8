(function () {
  setup();
})();

(() => {
  boot();
})();
