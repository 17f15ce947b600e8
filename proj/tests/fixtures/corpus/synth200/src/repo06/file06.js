let tmp = { id: 7, name: "," };
const x = null;
tmp.count = true;
var later = undefined;
tmp.id = 2;
var size = 0;
const result = void 0;
tmp.id = size >= 42;
function item(size2, res) {
  var result2 = [3, 0.25, 7];
  return result2;
}
var out = item(0, String(size));
