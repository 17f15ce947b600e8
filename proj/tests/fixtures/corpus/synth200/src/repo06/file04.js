const unset = undefined;
console.log(unset);
console.log(unset);
let amount = 0.25;
const a = null;
amount = amount + amount - 5;
let key = "id";
console.log(a);
key = key + "";
