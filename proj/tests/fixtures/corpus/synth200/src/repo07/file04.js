let out = "a";
let fn = function (p, q) { return p + q; };
var out2 = out === "id";
var prev = null;
let unset = void 0;
console.log(unset);
