/**
 * Node bindings for the thaitext core.
 *
 * The core is consumed strictly through its command line interface: each
 * loaded tokenizer keeps long-running `tokenize` / `tcc` / `normalize`
 * pipelines (one input line, one flushed output line), so calls after the
 * first are a pipe round-trip, not a process start.  Strings cross the
 * boundary as UTF-8; token lists travel on a U+001F separator, which is
 * why input text must not contain that scalar.
 *
 * Newlines cannot cross a line protocol, so multi-line text is split on
 * "\n", each line is processed separately, and for tokenization every
 * seam becomes a literal "\n" token.  Joined output therefore still
 * reproduces the input exactly; only the grouping of whitespace around
 * newlines can differ from an in-process run.
 */

import { spawn, type ChildProcessWithoutNullStreams } from "node:child_process";
import { createInterface, type Interface } from "node:readline";

export const TOKEN_SEPARATOR = "";

export interface LoadOptions {
  /** CLI argv, e.g. ["python3", "-m", "thaitext"]; defaults to the
   * THAITEXT_CLI environment variable or plain "thaitext". */
  command?: string[];
  engine?: "newmm" | "longest";
  safe?: boolean;
}

interface Waiter {
  resolve: (line: string) => void;
  reject: (error: Error) => void;
}

interface Pipeline {
  child: ChildProcessWithoutNullStreams;
  reader: Interface;
  waiting: Waiter[];
  stderr: string;
  closed: boolean;
}

function cliCommand(options: LoadOptions): string[] {
  if (options.command && options.command.length > 0) {
    return options.command;
  }
  const fromEnv = process.env.THAITEXT_CLI;
  if (fromEnv) {
    const parts = fromEnv.split(" ").filter((p) => p.length > 0);
    if (parts.length > 0) {
      return parts;
    }
  }
  return ["thaitext"];
}

function startPipeline(argv: string[]): Pipeline {
  const child = spawn(argv[0], argv.slice(1), {
    stdio: ["pipe", "pipe", "pipe"],
  });
  const pipeline: Pipeline = {
    child,
    reader: createInterface({ input: child.stdout }),
    waiting: [],
    stderr: "",
    closed: false,
  };
  child.stderr.setEncoding("utf8");
  child.stderr.on("data", (chunk: string) => {
    pipeline.stderr += chunk;
  });
  // EPIPE surfaces via the close handler; swallow the raw event.
  child.stdin.on("error", () => {});
  pipeline.reader.on("line", (line) => {
    const waiter = pipeline.waiting.shift();
    if (waiter) {
      waiter.resolve(line);
    }
  });
  const fail = (error: Error) => {
    pipeline.closed = true;
    const pending = pipeline.waiting.splice(0);
    for (const waiter of pending) {
      waiter.reject(error);
    }
  };
  child.on("error", (error) => fail(new Error(`cannot start ${argv.join(" ")}: ${error.message}`)));
  child.on("close", (code) => {
    const detail = pipeline.stderr.trim();
    fail(new Error(detail || `${argv.join(" ")} exited with code ${code}`));
  });
  return pipeline;
}

function request(pipeline: Pipeline, line: string): Promise<string> {
  return new Promise((resolve, reject) => {
    if (pipeline.closed) {
      reject(new Error(pipeline.stderr.trim() || "pipeline is closed"));
      return;
    }
    pipeline.waiting.push({ resolve, reject });
    pipeline.child.stdin.write(line + "\n", "utf8");
  });
}

function checkText(text: string): void {
  if (text.includes(TOKEN_SEPARATOR)) {
    throw new Error("text contains the reserved separator U+001F");
  }
}

export class BoundTokenizer {
  private pipelines = new Map<string, Pipeline>();
  private released = false;

  private constructor(
    private readonly lexiconPath: string,
    private readonly options: LoadOptions,
  ) {}

  /** Load a tokenizer over the given word list.  A missing or malformed
   * file rejects with the core's diagnostic (path and line number). */
  static async load(lexiconPath: string, options: LoadOptions = {}): Promise<BoundTokenizer> {
    const tokenizer = new BoundTokenizer(lexiconPath, options);
    // Round-trip one empty line: if the core cannot load the lexicon it
    // exits before answering and the probe rejects with its stderr.
    await request(tokenizer.pipeline("tokenize"), "");
    return tokenizer;
  }

  private pipeline(kind: "tokenize" | "tcc" | "normalize"): Pipeline {
    if (this.released) {
      throw new Error("tokenizer has been released");
    }
    let existing = this.pipelines.get(kind);
    if (existing && !existing.closed) {
      return existing;
    }
    const base = cliCommand(this.options);
    const argv = [...base, kind];
    if (kind === "tokenize") {
      argv.push("--dict", this.lexiconPath, "--delimiter", TOKEN_SEPARATOR);
      if (this.options.engine) {
        argv.push("--engine", this.options.engine);
      }
      if (this.options.safe) {
        argv.push("--safe");
      }
    } else if (kind === "tcc") {
      argv.push("--delimiter", TOKEN_SEPARATOR);
    }
    existing = startPipeline(argv);
    this.pipelines.set(kind, existing);
    return existing;
  }

  private async tokensPerLine(kind: "tokenize" | "tcc", text: string): Promise<string[]> {
    checkText(text);
    const pipeline = this.pipeline(kind);
    const out: string[] = [];
    const lines = text.split("\n");
    for (let i = 0; i < lines.length; i++) {
      if (i > 0) {
        out.push("\n"); // seam token keeps coverage exact
      }
      const answer = await request(pipeline, lines[i]);
      if (answer.length > 0) {
        out.push(...answer.split(TOKEN_SEPARATOR));
      }
    }
    return out;
  }

  wordTokenize(text: string): Promise<string[]> {
    return this.tokensPerLine("tokenize", text);
  }

  tccSegment(text: string): Promise<string[]> {
    return this.tokensPerLine("tcc", text);
  }

  async normalizeText(text: string): Promise<string> {
    checkText(text);
    const pipeline = this.pipeline("normalize");
    const parts: string[] = [];
    for (const line of text.split("\n")) {
      parts.push(await request(pipeline, line));
    }
    return parts.join("\n");
  }

  /** Stop the underlying processes.  Releasing twice throws. */
  release(): void {
    if (this.released) {
      throw new Error("tokenizer already released");
    }
    this.released = true;
    for (const pipeline of this.pipelines.values()) {
      pipeline.closed = true;
      pipeline.reader.close();
      pipeline.child.kill();
    }
    this.pipelines.clear();
  }

  get isReleased(): boolean {
    return this.released;
  }
}

export function load(lexiconPath: string, options: LoadOptions = {}): Promise<BoundTokenizer> {
  return BoundTokenizer.load(lexiconPath, options);
}

export function word_tokenize(handle: BoundTokenizer, text: string): Promise<string[]> {
  return handle.wordTokenize(text);
}

export function tcc_segment(handle: BoundTokenizer, text: string): Promise<string[]> {
  return handle.tccSegment(text);
}

export function normalize(handle: BoundTokenizer, text: string): Promise<string> {
  return handle.normalizeText(text);
}

export function release(handle: BoundTokenizer): void {
  handle.release();
}
