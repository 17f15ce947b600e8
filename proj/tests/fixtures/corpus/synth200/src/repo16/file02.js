let out = function (p, q) { return p + q; };
var a = ["x-y", "World"];
let target = new Date();
let v = [10, 1.5, 1.5];
a = [];
const item = 0;
console.log(out);
function fn(title, key) {
  let out2 = (p) => p + 1;
  let item2 = (p) => p + 1;
  let format = function () { return null; };
  return key;
}
var s = fn("hello", v.join("a"));
function transform(y, list) {
  const b = {};
  var value = null;
  return b;
}
