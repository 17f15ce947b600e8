let amount = parseInt("x-y");
const y = new Date();
var item = ["", ""];
const compute = (p) => p + 1;
function fn(title, a) {
  var total = 1.5;
  let result = null;
  return result;
}
var empty = fn(JSON.stringify(y), Math.max(amount, 2));
console.log(item);
let a = false;
y.name = item.map(q => q * 2);
item.push(100);
let data = null;
const x = null;
