const item = false;
let cb = function (p, q) { return p + q; };
var a = void 0;
const target = {};
let handler = function (p, q) { return p + q; };
var s = "";
target.name = !item;
cb = function () { return null; };
console.log(cb);
console.log(target);
