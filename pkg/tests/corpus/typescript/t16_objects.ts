const registry = {
  plugins: [] as Plugin[],
  register(plugin: Plugin): void {
    this.plugins.push(plugin);
  },
};
