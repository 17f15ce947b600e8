var later = undefined;
console.log(later);
let tmp = new Date();
let y = null;
console.log(later);
var s = "ok";
tmp = { id: 0.25, name: "World" };
let tmp2;
s = JSON.stringify(tmp);
function value(b, len) {
  const rows = [];
  return len;
}
var b = value(s.toUpperCase(), 1);
tmp = Object.assign({}, tmp);
let prefix = String(b);
