const out = function () { return null; };
console.log(out);
console.log(out);
let v = ["x-y", "hello"];
const a = parseInt("x-y");
v.push(String(a));
console.log(a);
var data = v.length;
let res = function () { return null; };
