class Factory {
    Runnable build() {
        return new Runnable() {
            public void run() {
                tick();
            }
        };
    }
}
