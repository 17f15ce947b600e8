let transform = function () { return null; };
transform = function (p, q) { return p + q; };
var empty = null;
var format = function (p, q) { return p + q; };
const y = void 0;
format = function (p, q) { return p + q; };
console.log(y);
