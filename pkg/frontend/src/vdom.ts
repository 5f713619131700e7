// A minimal virtual node tree.  Views are pure functions returning
// VNodes, so tests can inspect layouts without a browser; the browser
// entry point materializes them with `mount`.

export interface VNode {
  tag: string;
  attrs: Record<string, string>;
  on?: Record<string, (event: Event) => void>;
  children: (VNode | string)[];
}

export function h(
  tag: string,
  attrs: Record<string, string> = {},
  children: (VNode | string)[] = [],
  on?: Record<string, (event: Event) => void>,
): VNode {
  return { tag, attrs, children, on };
}

export function text(node: VNode | string): string {
  if (typeof node === "string") {
    return node;
  }
  return node.children.map(text).join("");
}

/** Depth-first search over a VNode tree by CSS-class token. */
export function findAll(node: VNode | string, className: string): VNode[] {
  if (typeof node === "string") {
    return [];
  }
  const own = (node.attrs["class"] ?? "").split(/\s+/).includes(className) ? [node] : [];
  return own.concat(node.children.flatMap((child) => findAll(child, className)));
}

export function findFirst(node: VNode | string, className: string): VNode | undefined {
  return findAll(node, className)[0];
}

/** Materialize a VNode into a real DOM element (browser only). */
export function mount(node: VNode | string, doc: Document): Node {
  if (typeof node === "string") {
    return doc.createTextNode(node);
  }
  const el = doc.createElement(node.tag);
  for (const [key, value] of Object.entries(node.attrs)) {
    el.setAttribute(key, value);
  }
  for (const [event, handler] of Object.entries(node.on ?? {})) {
    el.addEventListener(event, handler);
  }
  for (const child of node.children) {
    el.appendChild(mount(child, doc));
  }
  return el;
}
