const visible = true;
const data = [0, 10, 3];
console.log(visible);
let entries = data.slice(2);
var x = ["", "x-y"];
let x2;
