#!/usr/bin/env node
// Generates the synthetic JavaScript fixture corpora used by the test suites.
//
// Each generated file is written three ways:
//   src/<repo>/<file>.js      the JavaScript source
//   ast/<repo>/<file>.json    Babel ESTree (start/end offsets, loc stripped)
//   labels/<repo>/<file>.json {"start:end": "<class>"} for covered sites
//
// Labels come from the generator's own knowledge of each variable's type, so
// the corpus does not need an instrumented runtime.
//
// usage: npm install @babel/parser && node gen_corpus.js <out-dir> <name> <repos> <files-per-repo> <seed> [small]

const fs = require("fs");
const path = require("path");
const parser = require("@babel/parser");

function mulberry32(seed) {
  return function () {
    seed |= 0;
    seed = (seed + 0x6d2b79f5) | 0;
    let t = Math.imul(seed ^ (seed >>> 15), 1 | seed);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

let rand = mulberry32(1);
const pick = (xs) => xs[Math.floor(rand() * xs.length)];
const chance = (p) => rand() < p;
const randint = (lo, hi) => lo + Math.floor(rand() * (hi - lo + 1));

// Code fragments: strings or {parts, type}. Typed fragments become label spans.
const frag = (type, ...parts) => ({ type, parts });

function flatten(f, out) {
  if (typeof f === "string") {
    out.text += f;
    return;
  }
  const start = out.text.length;
  for (const p of f.parts) flatten(p, out);
  if (f.type && out.covered) out.labels.push([start, out.text.length, f.type]);
}

const NAME_POOLS = {
  number: ["count", "total", "index", "size", "offset", "amount", "width", "n", "num", "len"],
  string: ["name", "title", "message", "label", "text", "str", "key", "prefix", "url", "s"],
  boolean: ["isReady", "enabled", "done", "flag", "visible", "ok", "hasItems", "valid"],
  array: ["items", "list", "values", "rows", "parts", "arr", "entries", "ids"],
  object: ["config", "options", "user", "state", "obj", "settings", "target", "ctx"],
  function: ["callback", "handler", "fn", "compute", "format", "cb", "transform"],
  null: ["empty", "nothing", "cached", "parent", "prev"],
  undefined: ["missing", "pending", "later", "unset"],
};
const GENERIC = ["value", "data", "tmp", "result", "item", "x", "y", "a", "b", "v", "res", "out"];
const TYPES = Object.keys(NAME_POOLS);

class Scope {
  constructor() {
    this.vars = [];
    this.used = new Set(["i", "k", "p", "q", "console", "Math", "JSON", "Object"]);
  }
  fresh(type) {
    const pool = chance(0.6) ? NAME_POOLS[type] : GENERIC;
    let base = pick(pool);
    let name = base;
    for (let i = 2; this.used.has(name); i++) name = base + i;
    this.used.add(name);
    return name;
  }
  of(type) {
    const xs = this.vars.filter((v) => v.type === type);
    return xs.length ? pick(xs) : null;
  }
}

const ref = (v) => frag(v.type, v.name);
const num = () => frag("number", String(pick([0, 1, 2, 3, 5, 10, 42, 100, 7, 1.5, 0.25])));
const str = () => frag("string", JSON.stringify(pick(["a", "hello", "id", "", "x-y", "World", "ok", ","])));

function expr(scope, type, depth = 0) {
  const any = (t) => scope.of(t);
  const deep = depth < 2;
  switch (type) {
    case "number": {
      const s = any("string"), a = any("array"), n = any("number");
      const opts = [() => num()];
      if (n && deep) opts.push(() => frag("number", ref(n), pick([" + ", " * ", " - "]), expr(scope, "number", depth + 1)));
      if (s) opts.push(() => frag("number", ref(s), ".length"));
      if (a) opts.push(() => frag("number", ref(a), ".length"));
      if (n) opts.push(() => frag("number", "Math.max(", ref(n), ", ", num(), ")"));
      opts.push(() => frag("number", "parseInt(", str(), ")"));
      return pick(opts)();
    }
    case "string": {
      const s = any("string"), o = any("object"), a = any("array"), n = any("number");
      const opts = [() => str()];
      if (s && deep) opts.push(() => frag("string", ref(s), " + ", expr(scope, "string", depth + 1)));
      if (s) opts.push(() => frag("string", ref(s), ".toUpperCase()"));
      if (o) opts.push(() => frag("string", "JSON.stringify(", ref(o), ")"));
      if (a) opts.push(() => frag("string", ref(a), ".join(", str(), ")"));
      if (n) opts.push(() => frag("string", "typeof ", ref(n)));
      if (n) opts.push(() => frag("string", "String(", ref(n), ")"));
      return pick(opts)();
    }
    case "boolean": {
      const n = any("number"), s = any("string"), b = any("boolean"), a = any("array");
      const opts = [() => frag("boolean", pick(["true", "false"]))];
      if (n) opts.push(() => frag("boolean", ref(n), pick([" > ", " < ", " === ", " >= "]), num()));
      if (s) opts.push(() => frag("boolean", ref(s), " === ", str()));
      if (b) opts.push(() => frag("boolean", "!", ref(b)));
      if (a) opts.push(() => frag("boolean", "Array.isArray(", ref(a), ")"));
      return pick(opts)();
    }
    case "array": {
      const a = any("array"), o = any("object"), s = any("string");
      const opts = [
        () => frag("array", "[", num(), ", ", num(), ", ", num(), "]"),
        () => frag("array", "[", str(), ", ", str(), "]"),
        () => frag("array", "[]"),
      ];
      if (a) opts.push(() => frag("array", ref(a), ".map(", "q => q * 2", ")"));
      if (a) opts.push(() => frag("array", ref(a), ".slice(", num(), ")"));
      if (o) opts.push(() => frag("array", "Object.keys(", ref(o), ")"));
      if (s) opts.push(() => frag("array", ref(s), ".split(", str(), ")"));
      return pick(opts)();
    }
    case "object": {
      const o = any("object");
      const opts = [
        () => frag("object", "{ id: ", num(), ", name: ", str(), " }"),
        () => frag("object", "{}"),
        () => frag("object", "new Date()"),
      ];
      if (o) opts.push(() => frag("object", "Object.assign({}, ", ref(o), ")"));
      return pick(opts)();
    }
    case "function":
      return pick([
        () => frag("function", "function (p, q) { return p + q; }"),
        () => frag("function", "(p) => p + 1"),
        () => frag("function", "function () { return null; }"),
      ])();
    case "null":
      return frag("null", "null");
    case "undefined":
      return pick([() => frag("undefined", "undefined"), () => frag("undefined", "void 0")])();
  }
  throw new Error("bad type " + type);
}

function declare(scope, covered) {
  const type = pick(TYPES);
  const name = scope.fresh(type);
  const v = { name, type };
  const kw = pick(["var", "let", "const"]);
  let stmt;
  if (type === "undefined" && kw !== "const" && chance(0.5)) {
    stmt = [kw, " ", ref(v), ";"];
  } else {
    stmt = [kw, " ", ref(v), " = ", expr(scope, type), ";"];
  }
  scope.vars.push({ ...v, mutable: kw !== "const" });
  return stmt;
}

function statement(scope) {
  const kinds = ["decl", "decl", "decl"];
  const mut = scope.vars.filter((v) => v.mutable && v.type !== "undefined" && v.type !== "null");
  if (mut.length) kinds.push("assign");
  if (scope.of("boolean") && mut.length) kinds.push("if");
  if (scope.of("array") && scope.vars.some((v) => v.type === "number" && v.mutable)) kinds.push("for");
  if (scope.of("array")) kinds.push("push");
  if (scope.of("object")) kinds.push("member");
  if (scope.vars.length) kinds.push("log");
  switch (pick(kinds)) {
    case "decl":
      return declare(scope);
    case "assign": {
      const v = pick(mut);
      return [ref(v), " = ", expr(scope, v.type), ";"];
    }
    case "if": {
      const b = scope.of("boolean");
      const v = pick(mut);
      return ["if (", ref(b), ") {\n  ", ref(v), " = ", expr(scope, v.type), ";\n}"];
    }
    case "for": {
      const a = scope.of("array");
      const t = pick(scope.vars.filter((v) => v.type === "number" && v.mutable));
      const i = { name: "i", type: "number" };
      return [
        "for (let ", ref(i), " = ", num(), "; ", ref(i), " < ", frag("number", ref(a), ".length"),
        "; ", ref(i), "++) {\n  ", ref(t), " += ", ref(i), ";\n}",
      ];
    }
    case "push": {
      const a = scope.of("array");
      return [ref(a), ".push(", expr(scope, pick(["number", "string"])), ");"];
    }
    case "member": {
      const o = scope.of("object");
      const key = pick(["id", "name", "count", "enabled", "items"]);
      return [ref(o), ".", key, " = ", expr(scope, pick(["number", "string", "boolean", "array"])), ";"];
    }
    case "log": {
      const v = pick(scope.vars);
      return ["console.log(", ref(v), ");"];
    }
  }
}

// A helper function whose parameters have fixed types; labelled only when called.
function helper(scope) {
  const ptypes = [pick(["number", "string"]), pick(["number", "string", "array"])];
  const fname = scope.fresh("function");
  const inner = new Scope();
  inner.used = new Set(scope.used);
  const params = ptypes.map((t) => ({ name: inner.fresh(t), type: t }));
  inner.vars.push(...params);
  const f = { name: fname, type: "function" };
  const called = chance(0.75);
  const body = [];
  const n = randint(1, 3);
  for (let i = 0; i < n; i++) body.push("  ", ...declare(inner), "\n");
  const ret = pick(inner.vars);
  const head = ["function ", ref(f), "(", ref(params[0]), ", ", ref(params[1]), ") {\n"];
  const parts = [...head, ...body, "  return ", ref(ret), ";\n}"];
  scope.vars.push({ ...f, mutable: false });
  const call = called
    ? [frag(ret.type, ref(f), "(", expr(scope, ptypes[0]), ", ", expr(scope, ptypes[1]), ")")]
    : null;
  return { parts, called, call, retType: ret.type };
}

function program(small) {
  const scope = new Scope();
  const chunks = [];
  const nStmts = small ? randint(4, 7) : randint(6, 12);
  for (let i = 0; i < nStmts; i++) {
    if (!small && i > 1 && chance(0.15)) {
      const h = helper(scope);
      chunks.push({ parts: h.parts, covered: h.called });
      if (h.call) {
        const rv = { name: scope.fresh(h.retType), type: h.retType };
        chunks.push({ parts: ["var ", ref(rv), " = ", ...h.call, ";"], covered: true });
        scope.vars.push({ ...rv, mutable: true });
      }
      continue;
    }
    chunks.push({ parts: statement(scope), covered: chance(0.92) });
  }
  const out = { text: "", labels: [] };
  for (const c of chunks) {
    out.covered = c.covered;
    for (const p of c.parts) flatten(p, out);
    out.text += "\n";
  }
  return out;
}

const STRIP = new Set(["loc", "extra", "comments", "leadingComments", "trailingComments", "innerComments", "range", "tokens"]);

function main() {
  const [outDir, name, repos, filesPerRepo, seed, small] = process.argv.slice(2);
  rand = mulberry32(Number(seed));
  const root = path.join(outDir, name);
  for (let r = 0; r < Number(repos); r++) {
    const repo = `repo${String(r).padStart(2, "0")}`;
    for (let f = 0; f < Number(filesPerRepo); f++) {
      const file = `file${String(f).padStart(2, "0")}`;
      const prog = program(small === "small");
      const ast = parser.parse(prog.text, { sourceType: "script" });
      const json = JSON.stringify(ast.program, (k, v) => (STRIP.has(k) ? undefined : v));
      const labels = {};
      for (const [s, e, t] of prog.labels) labels[`${s}:${e}`] = t;
      for (const [sub, ext, body] of [
        ["src", ".js", prog.text],
        ["ast", ".json", json + "\n"],
        ["labels", ".json", JSON.stringify(labels) + "\n"],
      ]) {
        const dir = path.join(root, sub, repo);
        fs.mkdirSync(dir, { recursive: true });
        fs.writeFileSync(path.join(dir, file + ext), body);
      }
    }
  }
}

main();
