class Broken {
    void ok() {
    }
    int bad( {
}
