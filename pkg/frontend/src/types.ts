/** Wire format of the curvature service. */

export type Notion =
  | 'ollivier'
  | 'ollivier_idleness'
  | 'lly'
  | 'bakry_emery'
  | 'bakry_emery_dimension'
  | 'bakry_emery_sign';

export const EDGE_NOTIONS: readonly Notion[] = ['ollivier', 'ollivier_idleness', 'lly'];

export interface CurvatureValue {
  fraction?: string;
  decimal?: number;
  sign?: 'negative' | 'zero' | 'positive';
}

export interface CurvatureResponse {
  notion: Notion;
  kind: 'edge' | 'vertex';
  values: Record<string, CurvatureValue>;
}

export interface ServiceError {
  error: string;
  message: string;
  location?: [number, number];
}

export interface NotionParams {
  idleness?: string;
  dimension?: string;
}

export interface CurvatureRequest {
  adjacency: string;
  notion: Notion;
  params?: NotionParams;
}

export function isEdgeNotion(notion: Notion): boolean {
  return EDGE_NOTIONS.includes(notion);
}
