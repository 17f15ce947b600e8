const prev = null;
var nothing = null;
const isReady = false;
function fn(count, res) {
  var x = void 0;
  const y = [];
  const flag = count === 0.25;
  return res;
}
var ids = fn(parseInt("id"), ["id", "World"]);
let options = {};
options = new Date();
function value(message, x) {
  const prefix = "ok";
  var y = true;
  const name = String(x);
  return x;
}
var width = value("x-y", parseInt("ok"));
var visible = Array.isArray(ids);
options.count = Array.isArray(ids);
ids.push(String(width));
