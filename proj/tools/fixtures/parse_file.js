#!/usr/bin/env node
// Writes the Babel ESTree of a JavaScript file (start/end offsets, loc stripped).
//
// usage: node parse_file.js <in.js> <out.json> [flow]

const fs = require("fs");
const parser = require("@babel/parser");

const [input, output, flavor] = process.argv.slice(2);
const ast = parser.parse(fs.readFileSync(input, "utf8"), {
  sourceType: "module",
  plugins: flavor === "flow" ? ["flow"] : [],
});
const strip = (k, v) => (k === "loc" || k === "extra" || k === "comments" ? undefined : v);
fs.writeFileSync(output, JSON.stringify(ast.program, strip));
