// Typed client for the puzzle service. Every bit of game state comes from
// these endpoints; the browser never permutes counters on its own.

export interface PlaneLine {
  covector: number[];
  point_ids: number[];
}

export interface PlanePayload {
  q: number;
  points: number[][];
  lines: PlaneLine[];
}

export interface SessionState {
  id: string;
  q: number;
  hole: number;
  arrangement: (number | null)[];
  history: number[];
  solved: boolean;
}

export interface MovePreview {
  target: number;
  line: number;
  swap: [number, number];
  pairs: [number, number][];
}

export interface MoveResponse {
  session: SessionState;
  applied: MovePreview;
}

export interface CreateSessionRequest {
  q: number;
  alpha?: number;
  scramble_length?: number;
  seed?: number;
}

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

async function parse<T>(res: Response): Promise<T> {
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = (await res.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  private url(path: string): string {
    return `${this.baseUrl}${path}`;
  }

  plane(q: number): Promise<PlanePayload> {
    return fetch(this.url(`/api/plane/${q}`)).then((r) => parse<PlanePayload>(r));
  }

  createSession(req: CreateSessionRequest): Promise<SessionState> {
    return fetch(this.url("/api/sessions"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(req),
    }).then((r) => parse<SessionState>(r));
  }

  getSession(id: string): Promise<SessionState> {
    return fetch(this.url(`/api/sessions/${id}`)).then((r) => parse<SessionState>(r));
  }

  move(id: string, target: number): Promise<MoveResponse> {
    return fetch(this.url(`/api/sessions/${id}/moves`), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ target }),
    }).then((r) => parse<MoveResponse>(r));
  }

  preview(id: string, target: number): Promise<MovePreview> {
    return fetch(this.url(`/api/sessions/${id}/preview?target=${target}`)).then((r) =>
      parse<MovePreview>(r),
    );
  }

  undo(id: string): Promise<SessionState> {
    return fetch(this.url(`/api/sessions/${id}/undo`), { method: "POST" }).then((r) =>
      parse<SessionState>(r),
    );
  }
}
