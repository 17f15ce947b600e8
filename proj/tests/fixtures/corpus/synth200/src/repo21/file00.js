var options = { id: 7, name: "hello" };
let item = true;
console.log(item);
const v = Object.keys(options);
function handler(s, s2) {
  let b = s2 === "id";
  return s2;
}
var x = handler("World", v.join("World"));
console.log(item);
v.push(v.join("hello"));
function item2(text, message) {
  const settings = { id: 10, name: "World" };
  return settings;
}
v.push(JSON.stringify(options));
options.id = x + v.join("x-y");
let res = null;
