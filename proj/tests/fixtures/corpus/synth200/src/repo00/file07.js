const nothing = null;
let settings = { id: 1.5, name: "hello" };
let cached = null;
console.log(nothing);
function callback(res, a) {
  const state = new Date();
  var data = null;
  let unset;
  return state;
}
var settings2 = callback("World", 3);
function handler(res, entries) {
  var callback2 = (p) => p + 1;
  const compute = function (p, q) { return p + q; };
  let b = null;
  return callback2;
}
var v = handler(",", ["x-y", "x-y"]);
settings2.enabled = JSON.stringify(settings);
settings = new Date();
function compute(total, s) {
  const item = (p) => p + 1;
  return item;
}
var cb = compute(parseInt("x-y"), ",");
var tmp = JSON.stringify(settings2);
