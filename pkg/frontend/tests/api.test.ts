import { describe, expect, it } from "vitest";

import { ApiClient, ServiceError } from "../src/api.js";
import { LINE_STATE_RAW } from "./fixtures.js";

interface Seen {
  url: string;
  method: string;
  body: string | null;
}

function stubFetch(status: number, payload: string) {
  const seen: Seen[] = [];
  const fetchImpl = async (input: string, init?: RequestInit) => {
    seen.push({
      url: input,
      method: init?.method ?? "GET",
      body: typeof init?.body === "string" ? init.body : null,
    });
    return new Response(payload, {
      status,
      headers: { "Content-Type": "application/json" },
    });
  };
  return { seen, fetchImpl };
}

describe("api client", () => {
  it("creates sessions with POST /session and the given options", async () => {
    const created = `{"id":"abc","seed":7,"state":${LINE_STATE_RAW}}`;
    const { seen, fetchImpl } = stubFetch(201, created);
    const api = new ApiClient("http://svc", fetchImpl);
    const out = await api.createSession({ n: 3, start: "line" });
    expect(out.id).toBe("abc");
    expect(out.seed).toBe(7);
    expect(seen).toHaveLength(1);
    expect(seen[0].url).toBe("http://svc/session");
    expect(seen[0].method).toBe("POST");
    expect(JSON.parse(seen[0].body!)).toEqual({ n: 3, start: "line" });
  });

  it("passes seed through when given", async () => {
    const created = `{"id":"abc","seed":123,"state":${LINE_STATE_RAW}}`;
    const { seen, fetchImpl } = stubFetch(201, created);
    const api = new ApiClient("", fetchImpl);
    await api.createSession({ n: 4, start: "random", seed: 123 });
    expect(JSON.parse(seen[0].body!)).toEqual({ n: 4, start: "random", seed: 123 });
  });

  it("keeps the state body verbatim in raw", async () => {
    const { fetchImpl } = stubFetch(200, LINE_STATE_RAW);
    const api = new ApiClient("", fetchImpl);
    const payload = await api.getState("a3ddbfcc90600c94");
    expect(payload.raw).toBe(LINE_STATE_RAW);
    expect(payload.state.n).toBe(3);
  });

  it("GETs state from /session/{id}/state", async () => {
    const { seen, fetchImpl } = stubFetch(200, LINE_STATE_RAW);
    const api = new ApiClient("", fetchImpl);
    await api.getState("deadbeef");
    expect(seen[0].url).toBe("/session/deadbeef/state");
    expect(seen[0].method).toBe("GET");
    expect(seen[0].body).toBeNull();
  });

  it("posts moves with from, to and axis", async () => {
    const { seen, fetchImpl } = stubFetch(200, LINE_STATE_RAW);
    const api = new ApiClient("", fetchImpl);
    await api.move("id1", [2, 0], [1, 1], "first");
    expect(seen[0].url).toBe("/session/id1/move");
    expect(seen[0].method).toBe("POST");
    expect(JSON.parse(seen[0].body!)).toEqual({
      from: [2, 0],
      to: [1, 1],
      axis: "first",
    });
  });

  it("omits axis from the move body when not chosen", async () => {
    const { seen, fetchImpl } = stubFetch(200, LINE_STATE_RAW);
    const api = new ApiClient("", fetchImpl);
    await api.move("id1", [2, 0], [1, 1]);
    expect(JSON.parse(seen[0].body!)).toEqual({ from: [2, 0], to: [1, 1] });
  });

  it("posts undo with an empty body", async () => {
    const { seen, fetchImpl } = stubFetch(200, LINE_STATE_RAW);
    const api = new ApiClient("", fetchImpl);
    await api.undo("id1");
    expect(seen[0].url).toBe("/session/id1/undo");
    expect(seen[0].method).toBe("POST");
  });

  it("fetches history", async () => {
    const { seen, fetchImpl } = stubFetch(200, '{"id":"id1","moves":[],"move_count":0}');
    const api = new ApiClient("", fetchImpl);
    const hist = await api.history("id1");
    expect(seen[0].url).toBe("/session/id1/history");
    expect(hist.moves).toEqual([]);
  });

  it("turns error bodies into ServiceError with status and message", async () => {
    const { fetchImpl } = stubFetch(409, '{"error":"destination cell (1,1) is occupied"}');
    const api = new ApiClient("", fetchImpl);
    const err = await api.move("id1", [2, 0], [1, 1], "first").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect((err as ServiceError).status).toBe(409);
    expect((err as ServiceError).message).toContain("occupied");
  });

  it("copes with non-JSON error bodies", async () => {
    const { fetchImpl } = stubFetch(500, "boom");
    const api = new ApiClient("", fetchImpl);
    const err = await api.getState("id1").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ServiceError);
    expect((err as ServiceError).status).toBe(500);
  });
});
