const enabled = true;
console.log(enabled);
let y = new Date();
console.log(y);
const prev = null;
y = {};
function item(result, y2) {
  const message = String(result);
  const num = 0;
  let unset;
  return num;
}
var offset = item(1, JSON.stringify(y));
const flag = !enabled;
if (flag) {
  offset = parseInt("a");
}
y.count = offset === 5;
