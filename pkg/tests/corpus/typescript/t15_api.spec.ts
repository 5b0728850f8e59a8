describe("api", () => {
  it("responds", async () => {
    const res = await ping();
    expect(res).toBe(true);
  });
});
