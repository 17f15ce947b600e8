var transform = function () { return null; };
let rows = [10, 1, 2];
rows.push(rows.length);
function v(value, s) {
  let data = value === 2;
  return data;
}
var res = v(rows.length, "ok");
if (res) {
  rows = [7, 1.5, 10];
}
if (res) {
  rows = rows.map(q => q * 2);
}
let total = 3;
rows.push(rows.join(","));
const ids = rows.map(q => q * 2);
