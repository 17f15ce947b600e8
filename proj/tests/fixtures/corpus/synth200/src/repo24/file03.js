var cb = (p) => p + 1;
var later = void 0;
function callback(size, values) {
  const prefix = typeof size;
  let later2 = void 0;
  const res = null;
  return values;
}
cb = (p) => p + 1;
console.log(cb);
let isReady = false;
console.log(later);
