const x = new Date();
let value = (p) => p + 1;
function y(name, size) {
  let options = new Date();
  return options;
}
var res = y("ok", parseInt("a"));
function handler(url, amount) {
  let b = Math.max(amount, 0);
  let nothing = null;
  let value2 = void 0;
  return url;
}
let compute = (p) => p + 1;
console.log(x);
