class Outer {
    class Inner {
        void ping() {
        }
    }

    static class Helper {
        int id;
    }
}
