const result = parseInt(",");
let value = null;
var value2 = null;
console.log(value);
console.log(value);
const later = void 0;
const callback = function () { return null; };
