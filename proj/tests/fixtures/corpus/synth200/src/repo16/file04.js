let cached = null;
var compute = (p) => p + 1;
compute = function () { return null; };
compute = function () { return null; };
console.log(compute);
compute = (p) => p + 1;
compute = function () { return null; };
const pending = undefined;
