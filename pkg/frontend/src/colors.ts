import { CurvatureValue } from './types.js';
import { fractionSign } from './rational.js';

/** Zero band matching the service's sign verdicts. */
export const ZERO_BAND = 1e-7;

export const NEGATIVE_COLOR = '#d64545';
export const ZERO_COLOR = '#8a8f98';
export const POSITIVE_COLOR = '#2f9e44';

export function signOf(value: CurvatureValue): -1 | 0 | 1 {
  if (value.sign !== undefined) {
    return value.sign === 'positive' ? 1 : value.sign === 'negative' ? -1 : 0;
  }
  if (value.fraction !== undefined) {
    return fractionSign(value.fraction);
  }
  const decimal = value.decimal ?? 0;
  if (decimal > ZERO_BAND) return 1;
  if (decimal < -ZERO_BAND) return -1;
  return 0;
}

export function colorFor(value: CurvatureValue): string {
  const sign = signOf(value);
  return sign > 0 ? POSITIVE_COLOR : sign < 0 ? NEGATIVE_COLOR : ZERO_COLOR;
}

/** Three-decimal label; sign verdicts render as symbols instead. */
export function labelFor(value: CurvatureValue): string {
  if (value.decimal !== undefined) return value.decimal.toFixed(3);
  if (value.sign !== undefined) {
    return value.sign === 'positive' ? '+' : value.sign === 'negative' ? '-' : '0';
  }
  return '';
}
