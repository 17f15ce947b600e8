var value;
var y = ["ok", "a"];
y = [1, 7, 0.25];
console.log(y);
let obj = { id: 1.5, name: "id" };
console.log(y);
obj = { id: 3, name: "hello" };
