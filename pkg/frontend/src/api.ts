/**
 * Typed client for the analyzer service.
 *
 * Every number the dashboard shows originates from these responses;
 * currency arrives as exact decimal strings and is rendered verbatim
 * (with grouping), never recomputed locally.
 */

export interface ScenarioSummary {
  name: string;
  servers_total?: number;
  roles?: string[];
  error?: string;
}

export interface BreakdownDto {
  power: string;
  cooling: string;
  hardware_software: string;
  personnel: string;
  total: string;
  period_years: number;
}

export interface YearDto {
  year: number;
  income: string;
  outcome: string;
  profit: string;
  cumulative_profit: string;
  roi: string;
}

export interface ProjectionDto {
  roi_convention: string;
  years: YearDto[];
  cumulative_profit: string;
  cumulative_roi: string;
}

export interface RoleReportDto {
  role: string;
  security_level: string;
  security_mechanism: string;
  users_per_hour: number;
  users_per_year_server: number;
  users_per_year_facility: number;
  costs: { server: BreakdownDto; rack: BreakdownDto; facility: BreakdownDto };
  income_annual: string;
  outcome_annual: string;
  outcome_source: string;
  projection: ProjectionDto;
}

export interface ReportDto {
  scenario: string;
  servers_total: number;
  servers_per_rack: number;
  racks_full: number;
  rack_remainder_servers: number;
  roles: RoleReportDto[];
  diagnostics: string[];
}

export interface SweepablePath {
  path: string;
  value: number | string;
}

export interface ScenarioManifest {
  name: string;
  document: unknown;
  sweepable: SweepablePath[];
}

export interface ApiErrorBody {
  code: "bad_request" | "not_found" | "unprocessable" | "internal";
  message: string;
  field_path?: string;
}

/** A non-2xx response, carrying the service's structured error body. */
export class ApiRequestError extends Error {
  readonly status: number;
  readonly body: ApiErrorBody;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.body = body;
  }
}

export type Overrides = Record<string, string | number>;

async function parseOrThrow<T>(response: Response): Promise<T> {
  if (response.ok) {
    return (await response.json()) as T;
  }
  let body: ApiErrorBody = { code: "internal", message: `HTTP ${response.status}` };
  try {
    const parsed = (await response.json()) as { error?: ApiErrorBody };
    if (parsed.error?.message) body = parsed.error;
  } catch {
    /* non-JSON error body; keep the fallback */
  }
  throw new ApiRequestError(response.status, body);
}

export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  async scenarios(): Promise<ScenarioSummary[]> {
    const response = await fetch(`${this.baseUrl}/api/scenarios`);
    const payload = await parseOrThrow<{ scenarios: ScenarioSummary[] }>(response);
    return payload.scenarios;
  }

  async manifest(name: string): Promise<ScenarioManifest> {
    const response = await fetch(`${this.baseUrl}/api/scenario/${encodeURIComponent(name)}`);
    return parseOrThrow<ScenarioManifest>(response);
  }

  async evaluate(name: string, overrides: Overrides = {}): Promise<ReportDto> {
    const body: Record<string, unknown> = { name };
    if (Object.keys(overrides).length > 0) body.overrides = overrides;
    const response = await fetch(`${this.baseUrl}/api/evaluate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    return parseOrThrow<ReportDto>(response);
  }
}
