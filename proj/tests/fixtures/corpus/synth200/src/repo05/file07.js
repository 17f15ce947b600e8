let a = [1.5, 0, 2];
a = [0, 7, 5];
const fn = function (p, q) { return p + q; };
console.log(a);
console.log(fn);
a = a.map(q => q * 2);
a.push("id");
a.push(a.length);
const value = 0;
console.log(fn);
a = [];
