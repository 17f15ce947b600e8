const callback = function () { return null; };
const item = [10, 2, 10];
function out(name, b) {
  const fn = function () { return null; };
  return fn;
}
var visible = Array.isArray(item);
if (visible) {
  visible = false;
}
item.push(item.join("a"));
console.log(visible);
console.log(out);
