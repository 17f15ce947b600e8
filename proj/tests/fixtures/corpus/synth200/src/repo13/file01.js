var v = void 0;
console.log(v);
var callback = (p) => p + 1;
let x = (p) => p + 1;
x = (p) => p + 1;
var result = null;
