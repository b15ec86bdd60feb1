/** Exact sign of a fraction string like "2/3", "-1/3" or "0".
 *
 * The service reports exact values as fraction strings; deciding the display
 * colour from them avoids rounding a tiny negative into the zero band.
 */

export function fractionSign(text: string): -1 | 0 | 1 {
  const trimmed = text.trim();
  const match = /^(-?\d+)(?:\/(\d+))?$/.exec(trimmed);
  if (!match) throw new Error(`not a fraction string: ${text}`);
  const numerator = BigInt(match[1]);
  if (match[2] !== undefined && BigInt(match[2]) === 0n) {
    throw new Error(`zero denominator: ${text}`);
  }
  if (numerator > 0n) return 1;
  if (numerator < 0n) return -1;
  return 0;
}
