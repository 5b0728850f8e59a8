class Animal {
  constructor(name) {
    this.name = name;
  }

  speak() {
    return this.name;
  }
}

class Dog extends Animal {
  speak() {
    return "woof";
  }
}

const Cat = class {
  purr() {
    return true;
  }
};
