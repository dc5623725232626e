/** Shapes of the service's JSON payloads, mirrored field for field. */

export interface DocSummary {
  id: string;
  title: string;
  citations: number;
  relevance: number;
}

export interface RankedEntry {
  id: string;
  name: string;
  score: number;
  supporting: DocSummary[];
}

export interface RelatedChip {
  phrase: string;
  score: number;
}

export interface ExpertsPayload {
  query: string;
  normalized: string;
  in_lexicon: boolean;
  results: RankedEntry[];
  related: RelatedChip[];
  timing_ms?: number;
}

export interface AuthorInfo {
  id: string;
  name: string;
  documents: number;
}

export interface ExpertisePayload {
  query: string;
  author: AuthorInfo;
  results: RankedEntry[];
  timing_ms?: number;
}

export interface RelatedPayload {
  query: string;
  normalized: string;
  results: RankedEntry[];
  timing_ms?: number;
}

export interface HealthPayload {
  status: string;
  documents: number;
  authors: number;
  lexicon: number;
  matcher_backend: string;
}
