let obj = { id: 7, name: "x-y" };
obj.name = [42, 3, 42];
function fn(n, size) {
  let unset = void 0;
  let transform = function () { return null; };
  return n;
}
var offset = fn(parseInt("World"), parseInt("a"));
obj.id = ["a", "id"];
const res = null;
obj.count = ["ok", "World"];
console.log(offset);
obj = {};
const value = typeof offset;
