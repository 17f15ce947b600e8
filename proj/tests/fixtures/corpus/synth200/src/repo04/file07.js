const target = new Date();
target.enabled = Object.keys(target);
let fn = (p) => p + 1;
const settings = {};
console.log(target);
const str = JSON.stringify(target);
let parent = null;
target.name = str === "World";
function callback(y, y2) {
  var res = (p) => p + 1;
  return res;
}
var item = callback(parseInt("a"), Object.keys(settings));
const res = "a";
let v = parseInt("a");
const y = null;
