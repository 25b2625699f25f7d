// Payload shapes of the documented JSON API.

export type Pos = 'NOUN' | 'VERB' | 'ADJ' | 'OTHER';

export interface ApiToken {
  surface: string;
  lemma: string;
  pos: Pos;
  is_stopword: boolean;
}

export interface ApiSentence {
  index: number;
  raw: string;
  tokens: ApiToken[];
}

export interface ProductSummary {
  id: string;
  title: string;
}

export interface ProductDetail extends ProductSummary {
  text: string;
  sentences: ApiSentence[];
}

export interface AbstractionEntry {
  property: string;
  level: number;
}

export interface QueryTokenPayload {
  kind: 'term' | 'property';
  text: string;
}

export interface MatchPayload {
  doc_id: string;
  score: number;
  rank: number;
  method: string;
  matched_properties: [string, string][];
}

export interface SearchResponse {
  query_tokens: QueryTokenPayload[];
  matches: MatchPayload[];
}

export type MethodName =
  | 'focus-abstracted'
  | 'focus-only'
  | 'overall-glove'
  | 'overall-purpmech';

export const METHODS: MethodName[] = [
  'focus-abstracted',
  'focus-only',
  'overall-glove',
  'overall-purpmech',
];

/** A token is clickable in step 2/3 iff the engine would keep it. */
export function isInteractive(token: ApiToken): boolean {
  return !token.is_stopword &&
    (token.pos === 'NOUN' || token.pos === 'VERB' || token.pos === 'ADJ');
}
