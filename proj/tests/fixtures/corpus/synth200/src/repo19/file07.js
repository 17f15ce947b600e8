var pending = void 0;
let data = function (p, q) { return p + q; };
const value = undefined;
data = function (p, q) { return p + q; };
function transform(count, out) {
  var values = ["", "a"];
  const item = false;
  const options = {};
  return out;
}
var result = transform(0, "");
function transform2(total, label) {
  const out = label.toUpperCase();
  var isReady = total >= 0;
  return total;
}
var size = transform2(parseInt("x-y"), result + result.toUpperCase());
size = 100;
