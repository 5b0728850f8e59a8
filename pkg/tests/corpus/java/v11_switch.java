class Switcher {
    int pick(int code) {
        switch (code) {
            case 1:
                return 10;
            default:
                return 0;
        }
    }

    String modern(int day) {
        return switch (day) {
            case 1 -> "mon";
            default -> "other";
        };
    }
}
