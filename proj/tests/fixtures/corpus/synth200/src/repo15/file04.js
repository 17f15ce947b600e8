let flag = true;
let message = "a";
let ctx = new Date();
const rows = ["", "ok"];
let ctx2 = new Date();
ctx.enabled = rows.map(q => q * 2);
function fn(width, a) {
  var total = 5;
  let value = null;
  return value;
}
var empty = null;
console.log(ctx2);
