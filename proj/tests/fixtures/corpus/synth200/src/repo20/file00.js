const out = undefined;
let item = {};
item.items = JSON.stringify(item);
item.count = "hello";
console.log(item);
item = Object.assign({}, item);
function callback(value, out2) {
  let res = (p) => p + 1;
  let str = out2 + out2.toUpperCase();
  return value;
}
const ok = false;
var ids = [];
const count = parseInt("hello");
