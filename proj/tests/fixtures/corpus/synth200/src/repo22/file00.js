var tmp = { id: 2, name: "" };
console.log(tmp);
tmp = {};
let str = JSON.stringify(tmp);
let out = 7;
var width = parseInt("x-y");
const x = str.toUpperCase();
