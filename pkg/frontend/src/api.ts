/** Fetch client for the session service.
 *
 * The fetch function is injectable so tests can count and script every
 * request. State-returning calls hand back the raw response text next
 * to the parsed document; the raw bytes are what undo guarantees to
 * reproduce, so the client keeps them verbatim.
 */

import {
  Cell,
  CreateResponseDoc,
  HistoryDoc,
  SessionStateDoc,
  StartChoice,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
    this.name = "ServiceError";
  }
}

export interface StatePayload {
  state: SessionStateDoc;
  raw: string;
}

export interface CreateOptions {
  n: number;
  start?: StartChoice;
  seed?: number;
}

async function errorMessage(res: Response): Promise<string> {
  const text = await res.text();
  try {
    const doc = JSON.parse(text) as { error?: string };
    if (typeof doc.error === "string") return doc.error;
  } catch {
    // fall through to the raw body
  }
  return text || `request failed with status ${res.status}`;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request(method: string, path: string, body?: unknown): Promise<string> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchImpl(this.baseUrl + path, init);
    if (!res.ok) {
      throw new ServiceError(res.status, await errorMessage(res));
    }
    return res.text();
  }

  async createSession(options: CreateOptions): Promise<CreateResponseDoc> {
    const body: Record<string, unknown> = { n: options.n };
    if (options.start !== undefined) body.start = options.start;
    if (options.seed !== undefined) body.seed = options.seed;
    const raw = await this.request("POST", "/session", body);
    return JSON.parse(raw) as CreateResponseDoc;
  }

  async getState(id: string): Promise<StatePayload> {
    const raw = await this.request("GET", `/session/${id}/state`);
    return { state: JSON.parse(raw) as SessionStateDoc, raw };
  }

  async move(id: string, from: Cell, to: Cell, axis?: string): Promise<StatePayload> {
    const body: Record<string, unknown> = { from, to };
    if (axis !== undefined) body.axis = axis;
    const raw = await this.request("POST", `/session/${id}/move`, body);
    return { state: JSON.parse(raw) as SessionStateDoc, raw };
  }

  async undo(id: string): Promise<StatePayload> {
    const raw = await this.request("POST", `/session/${id}/undo`);
    return { state: JSON.parse(raw) as SessionStateDoc, raw };
  }

  async history(id: string): Promise<HistoryDoc> {
    const raw = await this.request("GET", `/session/${id}/history`);
    return JSON.parse(raw) as HistoryDoc;
  }
}
