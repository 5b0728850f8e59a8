class util_test {
    void checks() {
        assert 1 + 1 == 2;
    }
}
