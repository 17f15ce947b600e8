var y = function (p, q) { return p + q; };
const len = 3;
console.log(y);
console.log(y);
function transform(res, amount) {
  let later = undefined;
  const pending = undefined;
  return res;
}
var item = transform(Math.max(len, 1.5), Math.max(len, 2));
let valid = item > 2;
console.log(y);
console.log(item);
valid = len === 0.25;
var isReady = false;
let empty = null;
