const a = true;
console.log(a);
var value = !a;
const hasItems = true;
console.log(hasItems);
console.log(hasItems);
