class Config {
    public static final int MAX = 100;
    private String name = "default";
    int[] sizes = {1, 2, 3};
    boolean active;
}
