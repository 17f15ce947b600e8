const s = ",";
let value = 7;
value = s.length;
value = 42;
var value2 = null;
const enabled = s === "ok";
