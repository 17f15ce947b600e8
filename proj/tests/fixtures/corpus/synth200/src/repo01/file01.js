var target = { id: 5, name: "," };
target = Object.assign({}, target);
console.log(target);
target.id = parseInt("hello");
console.log(target);
target = {};
const rows = [7, 1, 0];
target = Object.assign({}, target);
function a(n, ids) {
  let width = ids.length;
  let result = n < 100;
  return ids;
}
var arr = a(42, []);
const callback = function () { return null; };
console.log(arr);
