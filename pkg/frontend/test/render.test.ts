import { describe, expect, it } from "vitest";

import {
  escapeHtml,
  renderAuthorView,
  renderErrorView,
  renderSearchView,
} from "../src/render.js";
import {
  EMPTY_EXPERTS,
  RIVERS_EXPERTISE,
  STREAM_MINING_EXPERTS,
} from "./fixtures.js";

describe("escapeHtml", () => {
  it("neutralizes markup metacharacters", () => {
    expect(escapeHtml(`<b a="1" b='2'>&x</b>`)).toBe(
      "&lt;b a=&quot;1&quot; b=&#39;2&#39;&gt;&amp;x&lt;/b&gt;",
    );
  });
});

describe("renderSearchView", () => {
  const html = renderSearchView(STREAM_MINING_EXPERTS);

  it("lists experts in payload order", () => {
    const rivers = html.indexOf("A. Rivers");
    const brooks = html.indexOf("B. Brooks");
    expect(rivers).toBeGreaterThan(-1);
    expect(brooks).toBeGreaterThan(rivers);
  });

  it("renders scores without re-ranking", () => {
    expect(html).toContain("4.20310");
    expect(html).toContain("1.97700");
  });

  it("wires author buttons with the ranked entry id", () => {
    expect(html).toContain('data-action="author" data-author="a rivers"');
  });

  it("shows supporting documents with citation counts", () => {
    expect(html).toContain("Mining high-speed data streams");
    expect(html).toContain("(12 citations)");
  });

  it("renders related phrases as chips", () => {
    expect(html).toContain('data-action="chip" data-phrase="data streams"');
    expect(html).toContain('data-action="chip" data-phrase="sensor networks"');
  });

  it("shows an explicit empty state when there are no results", () => {
    const empty = renderSearchView(EMPTY_EXPERTS);
    expect(empty).toContain("No experts found");
    expect(empty).not.toContain("<ol");
    expect(empty).toContain("out-of-lexicon");
  });

  it("escapes payload text", () => {
    const hostile = {
      ...EMPTY_EXPERTS,
      query: `<script>alert(1)</script>`,
      normalized: `"quoted"`,
    };
    const out = renderSearchView(hostile);
    expect(out).not.toContain("<script>");
    expect(out).toContain("&lt;script&gt;");
    expect(out).toContain("&quot;quoted&quot;");
  });
});

describe("renderAuthorView", () => {
  const html = renderAuthorView(RIVERS_EXPERTISE);

  it("shows the author's display name and document count", () => {
    expect(html).toContain("A. Rivers");
    expect(html).toContain("4 documents");
  });

  it("renders expertise phrases as term buttons in payload order", () => {
    const mining = html.indexOf('data-action="term" data-phrase="stream mining"');
    const sensors = html.indexOf('data-action="term" data-phrase="sensor networks"');
    expect(mining).toBeGreaterThan(-1);
    expect(sensors).toBeGreaterThan(mining);
  });

  it("shows an empty state when the author has no phrases", () => {
    const out = renderAuthorView({ ...RIVERS_EXPERTISE, results: [] });
    expect(out).toContain("No expertise phrases");
  });
});

describe("renderErrorView", () => {
  it("includes the message and a retry control", () => {
    const html = renderErrorView("unknown author 'x'", 404);
    expect(html).toContain("unknown author &#39;x&#39;");
    expect(html).toContain('data-action="retry"');
    expect(html).toContain('data-kind="not-found"');
  });

  it("marks transport failures as unreachable", () => {
    expect(renderErrorView("service unreachable: refused", 0)).toContain(
      'data-kind="unreachable"',
    );
  });
});
