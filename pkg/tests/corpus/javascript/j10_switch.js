switch (mode) {
  case "a":
    run();
    break;
  case "b":
    walk();
    break;
  default:
    idle();
}
