import java.util.function.Function;

class Lambdas {
    Runnable task = () -> System.out.println("go");

    void wire(java.util.List<String> names) {
        names.forEach(n -> handle(n));
        Function<Integer, Integer> doubler = (x) -> x * 2;
    }
}
