const width = 3;
const index = 7;
console.log(index);
console.log(width);
const state = new Date();
console.log(state);
let arr = [];
function data(label, offset) {
  const res = label.toUpperCase();
  var later;
  const enabled = false;
  return offset;
}
var result = data(arr.join("id"), parseInt("x-y"));
arr.push(Math.max(result, 5));
let user = { id: 1.5, name: "," };
arr = [",", ","];
