const fn = function (p, q) { return p + q; };
const x = void 0;
console.log(fn);
console.log(fn);
console.log(fn);
var value = parseInt("World");
value = parseInt("");
value = Math.max(value, 0.25);
const width = Math.max(value, 5);
let arr = [];
console.log(x);
