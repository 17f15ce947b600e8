let b = null;
var visible = true;
let res = ",";
var offset = 7;
visible = !visible;
const out = null;
var name = res + typeof offset;
