// Wire types for the /api/v1 session service.

export interface EdgeDto {
  id: number;
  i: number;
  j: number;
  lhs: string;
  rhs: string[];
  dot: number;
  children: number[];
}

export interface ChartSnapshot {
  grammar: string;
  tokens: string[];
  edges: EdgeDto[];
}

export type TreeDto =
  | { leaf: string; tag: string | null; start: number; end: number }
  | { placeholder: string }
  | { node: string; children: TreeDto[] };

export interface TreeResponse {
  edge: number;
  tree: TreeDto;
  text: string;
}

export interface ParseDto {
  tree: TreeDto;
  text: string;
}

export interface StepResponse {
  done?: boolean;
  rule?: string;
  new_edge?: EdgeDto;
}

export interface ApplyResponse {
  new_edges: EdgeDto[];
}

export const RULE_NAMES = [
  "TopDownInit",
  "LexicalInsert",
  "TopDownPredict",
  "BottomUpPredict",
  "Fundamental",
] as const;

export type RuleName = (typeof RULE_NAMES)[number];

export type StrategyName = "TopDown" | "BottomUp";

export function isComplete(edge: EdgeDto): boolean {
  return edge.dot === edge.rhs.length;
}
