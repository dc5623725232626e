import { describe, expect, it } from "vitest";

import { ApiClient, ApiError, queryUrl } from "../src/api.js";
import { MockService } from "./mock.js";
import { RIVERS_EXPERTISE, STREAM_MINING_EXPERTS } from "./fixtures.js";

describe("queryUrl", () => {
  it("encodes parameters", () => {
    expect(queryUrl("/experts", { q: "stream mining", k: 10 })).toBe(
      "/experts?q=stream+mining&k=10",
    );
  });

  it("omits the question mark when there are no parameters", () => {
    expect(queryUrl("/healthz", {})).toBe("/healthz");
  });

  it("escapes reserved characters", () => {
    expect(queryUrl("/experts", { q: "a&b=c", k: 3 })).toBe(
      "/experts?q=a%26b%3Dc&k=3",
    );
  });
});

describe("ApiClient", () => {
  it("returns the decoded payload on success", async () => {
    const svc = new MockService();
    svc.route("/experts?q=stream+mining&k=10", STREAM_MINING_EXPERTS);
    const client = new ApiClient("", svc.fetchLike);
    const payload = await client.experts("stream mining", 10);
    expect(payload).toEqual(STREAM_MINING_EXPERTS);
    expect(svc.requests).toEqual(["/experts?q=stream+mining&k=10"]);
  });

  it("prefixes the base url", async () => {
    const svc = new MockService();
    svc.route("http://svc:8040/expertise?author=a+rivers&k=15", RIVERS_EXPERTISE);
    const client = new ApiClient("http://svc:8040", svc.fetchLike);
    const payload = await client.expertise("a rivers", 15);
    expect(payload.author.name).toBe("A. Rivers");
  });

  it("raises ApiError with the service's error detail", async () => {
    const svc = new MockService();
    svc.route("/experts?q=x&k=5", { error: "unknown author 'x'" }, 404);
    const client = new ApiClient("", svc.fetchLike);
    const err = await client.experts("x", 5).catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(404);
    expect((err as ApiError).message).toBe("unknown author 'x'");
  });

  it("falls back to a generic message when the body has no error field", async () => {
    const svc = new MockService();
    svc.route("/experts?q=x&k=5", "plain text", 500);
    const client = new ApiClient("", svc.fetchLike);
    const err = await client.experts("x", 5).catch((e: unknown) => e);
    expect((err as ApiError).message).toBe("service returned status 500");
  });

  it("maps transport failures to status 0", async () => {
    const client = new ApiClient("", () => Promise.reject(new Error("refused")));
    const err = await client.experts("x", 5).catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(0);
    expect((err as ApiError).message).toContain("service unreachable");
  });
});
