/** Hash-history abstraction: the browser implementation wraps
 * window.location, while tests drive a scripted in-memory stack.
 */

export interface HistoryLike {
  current(): string;
  push(hash: string): void;
  replace(hash: string): void;
  onChange(listener: (hash: string) => void): void;
}

export class BrowserHistory implements HistoryLike {
  current(): string {
    return window.location.hash;
  }

  push(hash: string): void {
    window.location.hash = hash;
  }

  replace(hash: string): void {
    window.location.replace(hash);
  }

  onChange(listener: (hash: string) => void): void {
    window.addEventListener("hashchange", () => listener(window.location.hash));
  }
}

/** In-memory stand-in with explicit back/forward, for tests.  Mirrors the
 * browser in one important way: push() fires the change listeners, the
 * way assigning location.hash fires hashchange. */
export class MemoryHistory implements HistoryLike {
  private stack: string[];
  private index = 0;
  private listeners: Array<(hash: string) => void> = [];

  constructor(initial = "") {
    this.stack = [initial];
  }

  current(): string {
    return this.stack[this.index] ?? "";
  }

  push(hash: string): void {
    this.stack.splice(this.index + 1);
    this.stack.push(hash);
    this.index += 1;
    this.notify();
  }

  replace(hash: string): void {
    this.stack[this.index] = hash;
    this.notify();
  }

  back(): void {
    if (this.index > 0) {
      this.index -= 1;
      this.notify();
    }
  }

  forward(): void {
    if (this.index < this.stack.length - 1) {
      this.index += 1;
      this.notify();
    }
  }

  onChange(listener: (hash: string) => void): void {
    this.listeners.push(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) {
      listener(this.current());
    }
  }
}
