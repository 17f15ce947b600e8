const data = undefined;
const entries = [];
entries.push("World");
console.log(entries);
console.log(entries);
var target = { id: 7, name: "" };
function handler(tmp, prefix) {
  const unset = undefined;
  let res = prefix + "id";
  const offset = res.length;
  return prefix;
}
var out = handler("hello", "x-y");
console.log(data);
let later;
function format(s, entries2) {
  const result = function () { return null; };
  return s;
}
var s = format("id", out.split("id"));
