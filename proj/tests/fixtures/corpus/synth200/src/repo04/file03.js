var fn = (p) => p + 1;
console.log(fn);
function handler(result, rows) {
  let transform = (p) => p + 1;
  return result;
}
var count = handler(parseInt(""), [5, 100, 10]);
var state = {};
let len = Math.max(count, 2);
const index = len * len * Math.max(len, 1);
const user = {};
console.log(fn);
var result = [1, 0, 1.5];
result.push(String(count));
const enabled = Array.isArray(result);
