const url = "World";
let item = url + url + "hello";
item = item.toUpperCase();
const settings = new Date();
console.log(item);
let options = {};
function fn(label, out) {
  var out2 = undefined;
  return out2;
}
var item2 = fn("a", 10);
var prefix = item.toUpperCase();
let unset = undefined;
let cached = null;
