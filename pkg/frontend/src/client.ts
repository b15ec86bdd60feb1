/** Thin typed client for the curvature service. */

import { CurvatureRequest, CurvatureResponse, ServiceError } from './types.js';

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ServiceRequestError extends Error {
  constructor(readonly status: number, readonly body: ServiceError) {
    super(body.message);
  }
}

export class CurvatureClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async curvature(request: CurvatureRequest): Promise<CurvatureResponse> {
    const response = await this.fetchFn(`${this.baseUrl}/api/curvature`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(request),
    });
    const body = (await response.json()) as CurvatureResponse | ServiceError;
    if (!response.ok) {
      throw new ServiceRequestError(response.status, body as ServiceError);
    }
    return body as CurvatureResponse;
  }
}
