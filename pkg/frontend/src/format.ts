/**
 * Locale-independent number presentation.
 *
 * Currency strings from the service are grouped with commas by string
 * manipulation (no parsing), so the exact digits survive untouched.
 */

export function groupThousands(decimalString: string): string {
  const negative = decimalString.startsWith("-");
  const unsigned = negative ? decimalString.slice(1) : decimalString;
  const [whole, fraction] = unsigned.split(".");
  const grouped = whole.replace(/\B(?=(\d{3})+(?!\d))/g, ",");
  const body = fraction !== undefined ? `${grouped}.${fraction}` : grouped;
  return negative ? `-${body}` : body;
}

export function formatMoney(decimalString: string): string {
  return `$${groupThousands(decimalString)}`;
}

/** Service ROI fractions ("12.344012") shown as percentages ("1234.40%"). */
export function formatRoiPercent(roiFraction: string, digits = 2): string {
  return `${(parseFloat(roiFraction) * 100).toFixed(digits)}%`;
}

export function formatCount(value: number): string {
  return groupThousands(String(value));
}
