var count = 1.5;
console.log(count);
var message = "a";
const a = typeof count;
let title = message.toUpperCase();
var amount = 5;
function fn(out, value) {
  var y = null;
  return y;
}
var empty = fn(title.length, Math.max(amount, 100));
console.log(a);
count = parseInt("World");
count = 2;
function v(num, label) {
  const enabled = label === ",";
  let data = {};
  const out = "a";
  return label;
}
const message2 = message.toUpperCase();
