class Service {
    @Override
    public String toString() {
        return "service";
    }

    @SuppressWarnings("unchecked")
    @Deprecated
    void legacy() {
    }
}
