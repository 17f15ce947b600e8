var v = true;
var len = parseInt("ok");
v = false;
function handler(a, s) {
  const width = parseInt("x-y");
  let options = {};
  return s;
}
var result = handler(3, typeof len);
result = "x-y";
if (v) {
  result = "hello";
}
console.log(result);
const y = parseInt("");
function fn(len2, v2) {
  var obj = {};
  return len2;
}
function fn2(title, value) {
  let b;
  let options = new Date();
  return options;
}
var ctx = fn2(typeof y, result.length);
