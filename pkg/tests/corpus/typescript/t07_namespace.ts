namespace Geometry {
  export const PI = 3.14159;
  export function area(r: number): number {
    return PI * r * r;
  }
}
