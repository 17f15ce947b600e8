let format = (p) => p + 1;
format = (p) => p + 1;
console.log(format);
format = function (p, q) { return p + q; };
var v = "a";
console.log(v);
function handler(n, values) {
  const parent = null;
  const b = null;
  return parent;
}
var parent = handler(v.length, [100, 5, 42]);
v = v + v + v.toUpperCase();
