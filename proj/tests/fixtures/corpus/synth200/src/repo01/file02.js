var isReady = false;
isReady = !isReady;
let nothing = null;
console.log(nothing);
if (isReady) {
  isReady = true;
}
function compute(key, res) {
  const arr = ["id", "hello"];
  var b = parseInt("x-y");
  return arr;
}
isReady = true;
function callback(x, index) {
  const x2 = function (p, q) { return p + q; };
  return index;
}
var num = callback(parseInt("id"), parseInt(""));
console.log(num);
num = num * num - Math.max(num, 0.25);
console.log(compute);
