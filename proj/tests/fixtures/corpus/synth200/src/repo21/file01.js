var user = {};
let missing = void 0;
var y = {};
y = {};
console.log(y);
let y2 = true;
function compute(title, tmp) {
  var missing2 = undefined;
  const hasItems = title === "hello";
  const len = parseInt(",");
  return missing2;
}
var pending = compute(JSON.stringify(user), parseInt("ok"));
if (y2) {
  y2 = false;
}
function x(y3, b) {
  const a = b.join("hello");
  return b;
}
var entries = x(parseInt("x-y"), []);
entries = entries.map(q => q * 2);
const message = entries.join("");
