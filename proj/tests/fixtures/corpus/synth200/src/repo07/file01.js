var data = null;
const callback = function (p, q) { return p + q; };
var res;
const a = void 0;
let res2 = null;
let cb = function (p, q) { return p + q; };
var y = true;
let options = {};
if (y) {
  options = new Date();
}
if (y) {
  cb = (p) => p + 1;
}
