/** Thin typed client for the query service.
 *
 * The transport is injectable so tests (and the mock-service mode) can
 * run without network access; the default uses the platform fetch.
 */

import type {
  ExpertisePayload,
  ExpertsPayload,
  HealthPayload,
  RelatedPayload,
} from "./types.js";

export interface HttpResponse {
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (url: string) => Promise<HttpResponse>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export function queryUrl(
  path: string,
  params: Record<string, string | number>,
): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    search.set(key, String(value));
  }
  const suffix = search.toString();
  return suffix ? `${path}?${suffix}` : path;
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: FetchLike = (url) => fetch(url),
  ) {}

  private async get<T>(
    path: string,
    params: Record<string, string | number>,
  ): Promise<T> {
    const url = this.baseUrl + queryUrl(path, params);
    let res: HttpResponse;
    try {
      res = await this.fetchFn(url);
    } catch (err) {
      throw new ApiError(0, `service unreachable: ${String(err)}`);
    }
    const body = await res.json().catch(() => null);
    if (res.status >= 200 && res.status < 300) {
      return body as T;
    }
    const detail =
      body !== null && typeof body === "object" && "error" in body
        ? String((body as { error: unknown }).error)
        : `service returned status ${res.status}`;
    throw new ApiError(res.status, detail);
  }

  experts(q: string, k: number): Promise<ExpertsPayload> {
    return this.get<ExpertsPayload>("/experts", { q, k });
  }

  expertise(author: string, k: number): Promise<ExpertisePayload> {
    return this.get<ExpertisePayload>("/expertise", { author, k });
  }

  related(q: string, k: number): Promise<RelatedPayload> {
    return this.get<RelatedPayload>("/related", { q, k });
  }

  health(): Promise<HealthPayload> {
    return this.get<HealthPayload>("/healthz", {});
  }
}
