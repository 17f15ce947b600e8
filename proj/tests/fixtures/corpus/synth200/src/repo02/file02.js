const item = null;
var ids = [7, 1.5, 10];
const obj = new Date();
ids = Object.keys(obj);
let y = Array.isArray(ids);
function compute(n, url) {
  const str = String(n);
  const x = n - n * Math.max(n, 42);
  var tmp = url.length;
  return url;
}
