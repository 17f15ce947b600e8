const a = void 0;
console.log(a);
const handler = function (p, q) { return p + q; };
function b(item, arr) {
  const ctx = {};
  return arr;
}
var items = b("a", [7, 42, 0]);
var data = null;
items = [];
let pending;
console.log(handler);
