var tmp = function (p, q) { return p + q; };
let unset = undefined;
var title = "World";
function item(count, result) {
  const res = null;
  return count;
}
tmp = function (p, q) { return p + q; };
let parts = ["", "id"];
