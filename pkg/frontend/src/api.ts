/**
 * Typed client for the review service protocol.
 *
 * Submissions retry on transient network failures only; the service is
 * idempotent per (question_id, worker_id), so a retried POST can never
 * duplicate a verdict. Every response carries the dataset version hash;
 * a changed hash means the client is reviewing a stale candidate set.
 */

import type {
  BlockSummary,
  NextCardResponse,
  ReviewCard,
  SubmitPayload,
} from "./model.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class StaleDatasetError extends Error {
  constructor(expected: string, got: string) {
    super(`dataset changed under the client (was ${expected}, now ${got})`);
    this.name = "StaleDatasetError";
  }
}

export interface BlocksResponse {
  version: string;
  blocks: BlockSummary[];
}

export interface RowsResponse {
  version: string;
  block_id: string;
  rows: ReviewCard[];
}

export interface ProgressResponse {
  version: string;
  block_id: string;
  reviewed: number;
  total: number;
  percent: number;
}

export interface SubmitAck {
  version: string;
  ok: boolean;
  question_id: string;
  block_id: string;
  reviewed: number;
  total: number;
}

export interface ReviewApiOptions {
  baseUrl: string;
  retries?: number;
  retryDelayMs?: number;
  fetchFn?: typeof fetch;
  sleepFn?: (ms: number) => Promise<void>;
}

const defaultSleep = (ms: number) => new Promise<void>((r) => setTimeout(r, ms));

export class ReviewApi {
  private readonly baseUrl: string;
  private readonly retries: number;
  private readonly retryDelayMs: number;
  private readonly fetchFn: typeof fetch;
  private readonly sleepFn: (ms: number) => Promise<void>;
  private version: string | null = null;

  constructor(options: ReviewApiOptions) {
    this.baseUrl = options.baseUrl.replace(/\/$/, "");
    this.retries = options.retries ?? 3;
    this.retryDelayMs = options.retryDelayMs ?? 400;
    this.fetchFn = options.fetchFn ?? fetch;
    this.sleepFn = options.sleepFn ?? defaultSleep;
  }

  get datasetVersion(): string | null {
    return this.version;
  }

  private checkVersion(payload: { version?: string }): void {
    if (typeof payload.version !== "string") {
      return;
    }
    if (this.version === null) {
      this.version = payload.version;
    } else if (this.version !== payload.version) {
      throw new StaleDatasetError(this.version, payload.version);
    }
  }

  private async request<T extends { version?: string }>(
    path: string,
    init?: RequestInit,
    retryNetworkErrors = false,
  ): Promise<T> {
    let attempt = 0;
    for (;;) {
      let response: Response;
      try {
        response = await this.fetchFn(this.baseUrl + path, init);
      } catch (err) {
        if (retryNetworkErrors && attempt < this.retries) {
          attempt += 1;
          await this.sleepFn(this.retryDelayMs * attempt);
          continue;
        }
        throw err;
      }
      if (!response.ok) {
        let detail = response.statusText;
        try {
          const body = (await response.json()) as { error?: string };
          if (body.error) detail = body.error;
        } catch {
          // keep the status text
        }
        throw new ApiError(response.status, detail);
      }
      const payload = (await response.json()) as T;
      this.checkVersion(payload);
      return payload;
    }
  }

  blocks(): Promise<BlocksResponse> {
    return this.request<BlocksResponse>("/api/blocks");
  }

  rows(blockId: string): Promise<RowsResponse> {
    return this.request<RowsResponse>(`/api/blocks/${blockId}/rows`);
  }

  nextCard(blockId: string): Promise<NextCardResponse> {
    return this.request<NextCardResponse>(`/api/blocks/${blockId}/next`);
  }

  progress(blockId: string): Promise<ProgressResponse> {
    return this.request<ProgressResponse>(`/api/blocks/${blockId}/progress`);
  }

  /** Post a verdict; retries transparently on network failure. */
  submit(payload: SubmitPayload): Promise<SubmitAck> {
    return this.request<SubmitAck>(
      "/api/verdicts",
      {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(payload),
      },
      true,
    );
  }
}
