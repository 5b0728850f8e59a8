function clamp(value: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, value));
}

export default function entry(): void {
  clamp(1, 0, 2);
}
