let total = parseInt("hello");
let num = parseInt("id");
const enabled = total < 2;
var items = [];
var y = total - parseInt("hello");
function transform(size, x) {
  var target = { id: 1.5, name: "hello" };
  return x;
}
var prefix = transform(parseInt(""), typeof y);
console.log(transform);
console.log(total);
for (let i = 5; i < items.length; i++) {
  num += i;
}
num = Math.max(total, 42);
const len = items.length;
