let x = parseInt("World");
console.log(x);
x = 3;
const tmp = "id";
const compute = function (p, q) { return p + q; };
const x2 = [];
for (let i = 0; i < x2.length; i++) {
  x += i;
}
