import { describe, expect, it } from 'vitest';
import { colorFor, labelFor, NEGATIVE_COLOR, POSITIVE_COLOR, ZERO_COLOR, signOf } from '../src/colors.js';
import { fractionSign } from '../src/rational.js';

describe('fractionSign', () => {
  it('reads exact fraction strings', () => {
    expect(fractionSign('2/3')).toBe(1);
    expect(fractionSign('-1/3')).toBe(-1);
    expect(fractionSign('0')).toBe(0);
    expect(fractionSign('7')).toBe(1);
    expect(() => fractionSign('x')).toThrow();
    expect(() => fractionSign('1/0')).toThrow();
  });
});

describe('colour scale', () => {
  it('uses exact fractions when present', () => {
    expect(colorFor({ fraction: '2/3', decimal: 0.667 })).toBe(POSITIVE_COLOR);
    expect(colorFor({ fraction: '-1/3', decimal: -0.333 })).toBe(NEGATIVE_COLOR);
    expect(colorFor({ fraction: '0', decimal: 0 })).toBe(ZERO_COLOR);
  });

  it('falls back to the zero band on decimals', () => {
    expect(signOf({ decimal: 5e-8 })).toBe(0);
    expect(signOf({ decimal: 2.0 })).toBe(1);
    expect(signOf({ decimal: -1.0 })).toBe(-1);
  });

  it('honours explicit sign verdicts', () => {
    expect(colorFor({ sign: 'positive' })).toBe(POSITIVE_COLOR);
    expect(colorFor({ sign: 'zero' })).toBe(ZERO_COLOR);
    expect(colorFor({ sign: 'negative' })).toBe(NEGATIVE_COLOR);
  });

  it('renders three-decimal labels', () => {
    expect(labelFor({ fraction: '2/3', decimal: 0.667 })).toBe('0.667');
    expect(labelFor({ fraction: '0', decimal: 0 })).toBe('0.000');
    expect(labelFor({ sign: 'positive' })).toBe('+');
  });
});
