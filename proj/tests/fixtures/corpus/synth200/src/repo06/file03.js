const isReady = true;
let value = [2, 100, 7];
let item = [",", "x-y"];
const handler = function (p, q) { return p + q; };
value = ["x-y", ","];
item = [];
let pending = void 0;
var url = "";
let later = void 0;
