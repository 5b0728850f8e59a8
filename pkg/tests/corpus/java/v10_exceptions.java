class Risky {
    void run() {
        try {
            work();
        } catch (IllegalStateException e) {
            throw new RuntimeException(e);
        } finally {
            close();
        }
    }

    void probe() {
        try (AutoCloseable res = open()) {
            res.toString();
        } catch (Exception e) {
        }
    }
}
