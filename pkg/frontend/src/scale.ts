/** Minimal linear display scale (data domain <-> pixel range). */
export class LinearScale {
  constructor(
    readonly domainMin: number,
    readonly domainMax: number,
    readonly rangeMin: number,
    readonly rangeMax: number,
  ) {}

  private get span(): number {
    const span = this.domainMax - this.domainMin;
    return span === 0 ? 1 : span;
  }

  apply(value: number): number {
    const t = (value - this.domainMin) / this.span;
    return this.rangeMin + t * (this.rangeMax - this.rangeMin);
  }

  invert(pixel: number): number {
    const t = (pixel - this.rangeMin) / (this.rangeMax - this.rangeMin);
    return this.domainMin + t * this.span;
  }
}

/** Data extent padded a little so marks do not sit on the plot border. */
export function paddedExtent(values: number[], pad = 0.05): [number, number] {
  if (values.length === 0) return [0, 1];
  let lo = Math.min(...values);
  let hi = Math.max(...values);
  if (lo === hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  const margin = (hi - lo) * pad;
  return [lo - margin, hi + margin];
}
