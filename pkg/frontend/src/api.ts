/** Thin fetch wrappers around the render service. */

import type { DatasetData, RenderRequest, RenderResponse } from "./state.js";

export class ApiError extends Error {
  readonly code: string;

  constructor(code: string, message: string) {
    super(message);
    this.name = "ApiError";
    this.code = code;
  }
}

async function errorFrom(response: Response): Promise<ApiError> {
  try {
    const body = await response.json();
    return new ApiError(body.code ?? "ERROR", body.message ?? response.statusText);
  } catch {
    return new ApiError("ERROR", `${response.status} ${response.statusText}`);
  }
}

export async function fetchExample(): Promise<DatasetData> {
  const response = await fetch("/api/example");
  if (!response.ok) {
    throw await errorFrom(response);
  }
  return (await response.json()) as DatasetData;
}

export async function postRender(request: RenderRequest): Promise<RenderResponse> {
  const response = await fetch("/api/render", {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(request),
  });
  if (!response.ok) {
    throw await errorFrom(response);
  }
  return (await response.json()) as RenderResponse;
}
