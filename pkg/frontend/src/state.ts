// Client-side game state: a verbatim mirror of the latest service response
// plus UI bookkeeping. All rule evaluation happens on the server; this
// controller only forwards requests and swaps in whatever comes back.
// Requests are serialized: while one is in flight, further play/undo calls
// are rejected so a tab can never interleave moves.

import {
  ApiClient,
  ApiError,
  MovePreview,
  MoveResponse,
  PlanePayload,
  SessionState,
} from "./api.js";

export type Listener = () => void;

export class GameController {
  plane: PlanePayload | null = null;
  session: SessionState | null = null;
  lastApplied: MovePreview | null = null;
  busy = false;
  error: string | null = null;
  hint: string | null = null;

  private listeners: Listener[] = [];

  constructor(private readonly api: ApiClient) {}

  onChange(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  get moveCount(): number {
    return this.session ? this.session.history.length - 1 : 0;
  }

  get solved(): boolean {
    return this.session?.solved ?? false;
  }

  async newGame(q: number, scrambleLength: number, seed?: number): Promise<void> {
    this.busy = true;
    this.error = null;
    this.emit();
    try {
      // Plane first: if the service is unreachable there is no partial board.
      const plane = await this.api.plane(q);
      const session = await this.api.createSession({
        q,
        scramble_length: scrambleLength,
        ...(seed === undefined ? {} : { seed }),
      });
      this.plane = plane;
      this.session = session;
      this.lastApplied = null;
      this.hint = null;
    } catch (err) {
      this.plane = null;
      this.session = null;
      this.error = err instanceof Error ? err.message : String(err);
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  /** Preview a hover target; returns null (with a hint) on the hole. */
  async hover(target: number): Promise<MovePreview | null> {
    if (!this.session || this.busy) return null;
    if (target === this.session.hole) {
      this.hint = "that is the hole: pick a counter to slide into it";
      this.emit();
      return null;
    }
    this.hint = null;
    try {
      return await this.api.preview(this.session.id, target);
    } catch {
      return null; // a stale hover must never break the board
    }
  }

  /** Play a move; resolves to null when rejected (busy or illegal). */
  async play(target: number): Promise<MoveResponse | null> {
    if (!this.session || this.busy) return null;
    if (target === this.session.hole) {
      this.error = "illegal move: that is the hole";
      this.emit();
      return null;
    }
    this.busy = true;
    this.error = null;
    this.emit();
    try {
      const response = await this.api.move(this.session.id, target);
      this.session = response.session;
      this.lastApplied = response.applied;
      return response;
    } catch (err) {
      // State on the server is unchanged for a rejected move.
      this.error = err instanceof ApiError ? err.message : String(err);
      return null;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  async undo(): Promise<boolean> {
    if (!this.session || this.busy) return false;
    this.busy = true;
    this.error = null;
    this.emit();
    try {
      this.session = await this.api.undo(this.session.id);
      this.lastApplied = null;
      return true;
    } catch (err) {
      this.error = err instanceof ApiError ? err.message : String(err);
      return false;
    } finally {
      this.busy = false;
      this.emit();
    }
  }

  /** Resolves once no request is in flight. */
  async whenIdle(): Promise<void> {
    while (this.busy) {
      await new Promise((resolve) => setTimeout(resolve, 5));
    }
  }
}
