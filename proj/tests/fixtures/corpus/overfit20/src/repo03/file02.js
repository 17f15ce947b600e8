const unset = void 0;
const x = void 0;
var cb = function (p, q) { return p + q; };
var n = 0;
