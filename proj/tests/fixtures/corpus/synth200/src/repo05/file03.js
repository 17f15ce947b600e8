var unset;
let ctx = new Date();
ctx.count = parseInt("ok");
console.log(ctx);
let config = new Date();
console.log(ctx);
function cb(result, b) {
  const a = null;
  let flag = result < 42;
  return b;
}
var a = cb(parseInt("a"), 0.25);
let size = Math.max(a, 1.5);
const format = function (p, q) { return p + q; };
ctx = {};
