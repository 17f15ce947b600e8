const ctx = {};
const a = false;
var config = new Date();
if (a) {
  config = { id: 10, name: "" };
}
const ids = [];
console.log(a);
const empty = null;
var item = true;
ctx.name = !a;
function fn(tmp, result) {
  var y = "a";
  return y;
}
var data = fn(ids.length, parseInt(""));
console.log(ids);
