class LoopDemo {
    int total(int[] values) {
        int sum = 0;
        for (int v : values) {
            sum += v;
        }
        for (int i = 0; i < 10; i++) {
            sum -= i;
        }
        while (sum > 100) {
            sum /= 2;
        }
        do {
            sum++;
        } while (sum < 0);
        return sum;
    }
}
