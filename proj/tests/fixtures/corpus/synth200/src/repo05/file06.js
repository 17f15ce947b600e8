const res = parseInt("");
const b = res < 2;
var compute = function () { return null; };
function format(item, res2) {
  const ctx = new Date();
  return ctx;
}
var user = format(res + 7, ["ok", "x-y"]);
let visible = false;
function result(tmp, entries) {
  let data = null;
  return data;
}
function callback(title, data) {
  var v = title === "";
  var prev = null;
  return prev;
}
var result2 = callback("a", [1.5, 2, 7]);
function item(num, title) {
  const target = {};
  return num;
}
var data = item(100, JSON.stringify(user));
let obj = Object.assign({}, user);
console.log(format);
var settings = {};
const settings2 = { id: 7, name: "hello" };
