let done = true;
var prev = null;
if (done) {
  done = !done;
}
let item = function (p, q) { return p + q; };
let tmp = function () { return null; };
console.log(item);
tmp = function (p, q) { return p + q; };
var y = (p) => p + 1;
item = (p) => p + 1;
let item2 = [",", "id"];
