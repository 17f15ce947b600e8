var v = parseInt("a");
v = Math.max(v, 2);
const prev = null;
console.log(v);
const result = "";
function handler(url, message) {
  var obj = {};
  let result2 = undefined;
  const fn = (p) => p + 1;
  return result2;
}
let item;
v = Math.max(v, 42);
console.log(prev);
