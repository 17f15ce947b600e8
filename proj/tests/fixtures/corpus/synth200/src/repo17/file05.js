let result = function () { return null; };
result = function () { return null; };
console.log(result);
var empty = null;
let user = {};
console.log(user);
user = {};
const out = ",";
function out2(count, parts) {
  let result2 = [3, 2, 3];
  const prev = null;
  return prev;
}
var out3 = out2(7, Object.keys(user));
console.log(out2);
