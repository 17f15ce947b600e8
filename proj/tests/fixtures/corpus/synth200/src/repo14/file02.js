var title = "a";
console.log(title);
let rows = ["x-y", "ok"];
var x = rows.join("hello");
console.log(x);
var data = "id";
console.log(title);
console.log(rows);
let cb = function (p, q) { return p + q; };
