const count = parseInt("a");
var value = typeof count;
function compute(tmp, len) {
  var value2 = tmp + "";
  var items = value2.split("ok");
  const width = value2.length;
  return value2;
}
var str = compute(value.toUpperCase(), parseInt("x-y"));
let a = function () { return null; };
console.log(value);
function callback(message, res) {
  var out = (p) => p + 1;
  const compute2 = function (p, q) { return p + q; };
  let missing;
  return out;
}
var transform = callback(str.toUpperCase(), [0, 0.25, 5]);
var parent = null;
const x = [1, 42, 0];
transform = function () { return null; };
const nothing = null;
let b = function () { return null; };
let pending = undefined;
