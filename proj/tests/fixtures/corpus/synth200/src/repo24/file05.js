let missing = void 0;
const out = {};
out.count = "";
console.log(out);
console.log(missing);
var amount = 42;
var missing2;
function tmp(size, message) {
  var nothing = null;
  let count = Math.max(size, 1.5);
  var data = true;
  return message;
}
var str = tmp(Math.max(amount, 42), String(amount));
