var out = null;
var x = "";
const handler = function (p, q) { return p + q; };
var value = [",", ""];
console.log(handler);
function data(prefix, url) {
  var result = parseInt("id");
  return url;
}
var data2 = data("a", "x-y");
