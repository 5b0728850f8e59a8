const square = (x: number): number => x * x;
const pick = <T>(items: T[]): T => items[0];
const handler: (e: Error) => void = (e) => log(e);
