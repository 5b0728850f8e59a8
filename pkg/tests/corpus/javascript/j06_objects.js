const settings = {
  retries: 3,
  backoff() {
    return this.retries * 100;
  },
  onError: (err) => log(err),
};
const matrix = [
  [1, 2],
  [3, 4],
];
