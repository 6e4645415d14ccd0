/**
 * Trailing-edge debounce for slider dragging: the wrapped function runs
 * once the input has been quiet for `delayMs`, with the latest arguments.
 */

export interface Debounced<A extends unknown[]> {
  (...args: A): void;
  /** Run a pending call immediately (used on commit, e.g. slider release). */
  flush(): void;
  cancel(): void;
}

export function debounce<A extends unknown[]>(
  fn: (...args: A) => void,
  delayMs: number,
): Debounced<A> {
  let timer: ReturnType<typeof setTimeout> | undefined;
  let pending: A | undefined;

  const run = () => {
    timer = undefined;
    if (pending !== undefined) {
      const args = pending;
      pending = undefined;
      fn(...args);
    }
  };

  const wrapped = (...args: A) => {
    pending = args;
    if (timer !== undefined) clearTimeout(timer);
    timer = setTimeout(run, delayMs);
  };
  wrapped.flush = () => {
    if (timer !== undefined) clearTimeout(timer);
    run();
  };
  wrapped.cancel = () => {
    if (timer !== undefined) clearTimeout(timer);
    timer = undefined;
    pending = undefined;
  };
  return wrapped;
}
