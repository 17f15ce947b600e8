let fn = function (p, q) { return p + q; };
var num = parseInt("a");
const pending = undefined;
var a = true;
if (a) {
  a = !a;
}
if (a) {
  fn = function (p, q) { return p + q; };
}
const x = void 0;
var ctx = new Date();
let value = num * Math.max(num, 10);
