/** Payload shapes served by the workbench API. */

export interface HistogramPayload {
  edges: number[];
  counts: number[];
  overflow_inf?: number;
}

export interface ScoreSummaryPayload {
  n: number;
  n_finite: number;
  min: number;
  max: number;
  quartiles: number[];
  distinct: number;
  histogram: HistogramPayload;
  low_discrimination: boolean;
  flags: string[];
}

export interface CorrelationPayload {
  mean: number;
  histogram: HistogramPayload;
  n_pairs: number;
  n_degenerate_pairs: number;
  degenerate_units: number[];
  flags: string[];
}

export interface TradeoffPayload {
  x_edges: number[];
  y_edges: number[];
  counts: number[][];
  accepted_counts: number[][] | null;
  n_dropped_nonfinite: number;
}

export interface DiagnosticsPayload {
  score_summary: ScoreSummaryPayload;
  correlation: CorrelationPayload | null;
  tradeoffs: Record<string, TradeoffPayload>;
  n_pool: number;
  n_accepted: number;
  threshold: number | null;
}

export interface FitnessResponse {
  n_pool: number;
  n_accepted: number;
  accept_mask: boolean[];
  threshold: number | null;
  cache_hits: string[];
  diagnostics: DiagnosticsPayload;
}

export interface MetricSpec {
  name: string;
  params: Record<string, unknown>;
}

export interface PoolInfo {
  n: number;
  k: number;
  level: string;
}

export interface SessionSummary {
  id: string;
  data: Record<string, boolean>;
  pool: PoolInfo | null;
  design: { n_accepted: number; locked: boolean; digest: string | null } | null;
  locked: boolean;
  official_draw: Record<string, unknown> | null;
}

export interface JobStatus {
  status: "running" | "done" | "failed";
  result: Record<string, unknown> | null;
  error: string | null;
}

export interface DrawnAllocation {
  labels?: number[];
  level?: string;
  group_of?: number[];
  arm_of_group?: number[];
  unit_arms?: number[];
}

export interface TestResultPayload {
  observed: number;
  p_value: number;
  n_null: number;
  null_statistics: number[];
}
