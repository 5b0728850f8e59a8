public record Point(int x, int y) {
    public int manhattan() {
        return Math.abs(x) + Math.abs(y);
    }
}

record Pair(String left, String right) {}
