/**
 * Stale-response guard: responses are rendered only if no newer request
 * was issued in the meantime (last write wins).
 */

export class LatestGate {
  private issued = 0;
  private accepted = 0;

  /** Take a token before sending a request. */
  next(): number {
    return ++this.issued;
  }

  /**
   * Report a response for the given token. Returns true when the response
   * is current and may be rendered; false when a newer request exists or a
   * newer response has already been accepted.
   */
  accept(token: number): boolean {
    if (token < this.issued || token <= this.accepted) {
      return false;
    }
    this.accepted = token;
    return true;
  }
}
