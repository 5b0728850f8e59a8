interface User {
  id: number;
  name: string;
  greet(prefix: string): string;
}

interface Empty {}
