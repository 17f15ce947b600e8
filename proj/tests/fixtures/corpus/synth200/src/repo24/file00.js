const a = "x-y";
var index = 2;
function compute(out, message) {
  const rows = message.split("x-y");
  return message;
}
var text = compute(a.length, String(index));
const nothing = null;
var label = String(index);
console.log(nothing);
function out(offset, size) {
  const num = 100;
  const fn = function () { return null; };
  var later;
  return offset;
}
var width = out(index - a.length, parseInt(""));
function compute2(tmp, a2) {
  let missing = undefined;
  return tmp;
}
var len = compute2(text.length, String(width));
