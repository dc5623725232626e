/** Canned service payloads used across the test suite. */

import type {
  ExpertisePayload,
  ExpertsPayload,
} from "../src/types.js";

export const STREAM_MINING_EXPERTS: ExpertsPayload = {
  query: "Stream Mining",
  normalized: "stream mining",
  in_lexicon: true,
  results: [
    {
      id: "a rivers",
      name: "A. Rivers",
      score: 4.2031,
      supporting: [
        { id: "d1", title: "Mining high-speed data streams", citations: 12, relevance: 0.31 },
        { id: "d2", title: "Stream summaries at scale", citations: 5, relevance: 0.12 },
      ],
    },
    {
      id: "b brooks",
      name: "B. Brooks",
      score: 1.977,
      supporting: [
        { id: "d3", title: "Sketching streaming counts", citations: 3, relevance: 0.09 },
      ],
    },
  ],
  related: [
    { phrase: "data streams", score: 0.44 },
    { phrase: "sensor networks", score: 0.21 },
  ],
  timing_ms: 1.25,
};

export const DATA_STREAMS_EXPERTS: ExpertsPayload = {
  query: "data streams",
  normalized: "data streams",
  in_lexicon: true,
  results: [
    {
      id: "c chen",
      name: "C. Chen",
      score: 3.5,
      supporting: [
        { id: "d4", title: "Windowed aggregation", citations: 7, relevance: 0.4 },
      ],
    },
  ],
  related: [{ phrase: "stream mining", score: 0.44 }],
  timing_ms: 0.8,
};

export const RIVERS_EXPERTISE: ExpertisePayload = {
  query: "a rivers",
  author: { id: "a rivers", name: "A. Rivers", documents: 4 },
  results: [
    {
      id: "stream mining",
      name: "stream mining",
      score: 2.9,
      supporting: [
        { id: "d1", title: "Mining high-speed data streams", citations: 12, relevance: 0.31 },
      ],
    },
    {
      id: "sensor networks",
      name: "sensor networks",
      score: 0.7,
      supporting: [],
    },
  ],
  timing_ms: 0.6,
};

export const EMPTY_EXPERTS: ExpertsPayload = {
  query: "zyzzyva lore",
  normalized: "zyzzyva lore",
  in_lexicon: false,
  results: [],
  related: [],
  timing_ms: 0.3,
};
