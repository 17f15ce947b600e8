var label = "a";
label = label + label.toUpperCase();
let parent = null;
console.log(parent);
label = label.toUpperCase();
console.log(label);
let fn = function (p, q) { return p + q; };
var a = [1.5, 0, 3];
console.log(a);
var hasItems = label === "x-y";
console.log(parent);
const width = a.length;
