const v = undefined;
var done = true;
let ok = false;
const ctx = new Date();
console.log(ok);
console.log(ctx);
let s = "x-y";
