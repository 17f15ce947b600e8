let nothing = null;
let y = true;
console.log(nothing);
if (y) {
  y = !y;
}
const ok = !y;
let nothing2 = null;
const a = void 0;
if (ok) {
  y = !y;
}
let res;
const result = {};
