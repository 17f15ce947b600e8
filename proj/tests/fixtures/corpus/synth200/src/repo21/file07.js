var cb = function () { return null; };
var visible = true;
var size = parseInt("x-y");
if (visible) {
  cb = (p) => p + 1;
}
const rows = [];
cb = function (p, q) { return p + q; };
console.log(rows);
cb = (p) => p + 1;
const count = rows.length;
const unset = undefined;
const a = true;
