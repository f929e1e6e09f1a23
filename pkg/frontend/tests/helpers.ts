import { readFileSync } from "node:fs";
import { join } from "node:path";

const FIXTURES = join(__dirname, "..", "fixtures");

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(FIXTURES, `${name}.json`), "utf-8")) as T;
}

export function container(): HTMLElement {
  const root = document.createElement("div");
  document.body.appendChild(root);
  return root;
}

/** Envelope wrapper matching the API's success responses. */
export function okEnvelope(payload: unknown): Response {
  return new Response(JSON.stringify({ status: "ok", payload }), {
    status: 200,
    headers: { "Content-Type": "application/json" },
  });
}
