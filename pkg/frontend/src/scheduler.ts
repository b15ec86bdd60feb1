/** Debounced request scheduling with last-writer-wins semantics.
 *
 * Edits during rapid drawing collapse into one request per settled revision:
 * each change restarts a 150 ms timer, and when it fires the snapshot taken
 * at that moment is sent, tagged with its revision.  Responses for any other
 * revision are dropped, and at most one request is in flight per revision.
 */

export const DEBOUNCE_MS = 150;

export interface Snapshot<T> {
  revision: number;
  payload: T;
}

export type SendFn<T, R> = (payload: T) => Promise<R>;
export type ApplyFn<R> = (revision: number, response: R) => void;

export class RequestScheduler<T, R> {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private inFlight = false;
  private lastSentRevision = -1;
  private latest: Snapshot<T> | null = null;
  requestsSent = 0;

  constructor(
    private readonly send: SendFn<T, R>,
    private readonly apply: ApplyFn<R>,
    private readonly delay: number = DEBOUNCE_MS,
    private readonly onError: (error: unknown) => void = () => undefined,
  ) {}

  /** Called on every edit with the current snapshot. */
  schedule(snapshot: Snapshot<T>): void {
    this.latest = snapshot;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire();
    }, this.delay);
  }

  /** Drop any pending send (e.g. the canvas was cleared). */
  cancel(): void {
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = null;
    this.latest = null;
  }

  private async fire(): Promise<void> {
    if (this.inFlight) return; // completion re-fires for the newest snapshot
    const snapshot = this.latest;
    if (snapshot === null) return;
    if (snapshot.revision <= this.lastSentRevision) return; // one ask per revision
    this.inFlight = true;
    this.lastSentRevision = snapshot.revision;
    this.requestsSent += 1;
    try {
      const response = await this.send(snapshot.payload);
      this.apply(snapshot.revision, response);
    } catch (error) {
      this.onError(error);
    } finally {
      this.inFlight = false;
      // a newer snapshot may have arrived while the request was in flight
      if (this.latest !== null && this.latest.revision !== snapshot.revision) {
        void this.fire();
      }
    }
  }
}
