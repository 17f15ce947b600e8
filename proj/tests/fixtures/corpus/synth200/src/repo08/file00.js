let user = { id: 5, name: "id" };
user = Object.assign({}, user);
user = new Date();
const prev = null;
function item(total, width) {
  var b = ["a", ""];
  const x = undefined;
  return b;
}
var out = item(0, parseInt("a"));
user.count = [];
let arr = Object.keys(user);
