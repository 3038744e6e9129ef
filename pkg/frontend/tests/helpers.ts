/** A recording fetch fake that replays fixture payloads. */

export interface RecordedCall {
  url: string;
  method: string;
  body: unknown;
}

export type RouteTable = Record<string, (call: RecordedCall) => { status?: number; body: unknown }>;

export class FakeFetch {
  calls: RecordedCall[] = [];

  constructor(private routes: RouteTable) {}

  fetch = async (url: string, init?: RequestInit): Promise<Response> => {
    const method = init?.method ?? "GET";
    let body: unknown = undefined;
    if (typeof init?.body === "string") body = JSON.parse(init.body);
    const call: RecordedCall = { url, method, body };
    this.calls.push(call);
    const key = `${method} ${url}`;
    const route = this.routes[key] ?? this.routes[`${method} *`];
    if (!route) throw new Error(`no fixture route for ${key}`);
    const { status = 200, body: payload } = route(call);
    return new Response(JSON.stringify(payload), {
      status,
      headers: { "Content-Type": "application/json" },
    });
  };

  callsTo(method: string, urlPart: string): RecordedCall[] {
    return this.calls.filter((c) => c.method === method && c.url.includes(urlPart));
  }

  mutations(): RecordedCall[] {
    return this.calls.filter((c) => c.method !== "GET");
  }
}

/** Every numeric literal appearing in an SVG string's visible text. */
export function renderedNumbers(svg: string): number[] {
  const texts = [...svg.matchAll(/<text[^>]*>([^<]*)<\/text>/g)].map((m) => m[1]);
  const titles = [...svg.matchAll(/<title>([^<]*)<\/title>/g)].map((m) => m[1]);
  const out: number[] = [];
  for (const chunk of [...texts, ...titles]) {
    for (const match of chunk.matchAll(/-?\d+(?:\.\d+)?(?:e[+-]?\d+)?/gi)) {
      out.push(Number(match[0]));
    }
  }
  return out;
}
