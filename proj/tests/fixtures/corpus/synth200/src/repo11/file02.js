const item = undefined;
let transform = function (p, q) { return p + q; };
function item2(a, data) {
  var res = parseInt(",");
  return res;
}
var result = item2("World", "");
const index = Math.max(result, 1);
result = 3;
result = result + result * 1.5;
console.log(item2);
