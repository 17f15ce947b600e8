const x = false;
console.log(x);
var y = true;
function cb(index, result) {
  const result2 = result - index * parseInt("x-y");
  let value = false;
  return result2;
}
var n = cb(3, 1);
console.log(y);
let handler = (p) => p + 1;
var unset = undefined;
if (y) {
  y = n < 42;
}
console.log(cb);
const rows = ["id", "id"];
for (let i = 42; i < rows.length; i++) {
  n += i;
}
