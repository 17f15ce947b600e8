let out = false;
const unset = void 0;
let x = null;
let empty = null;
let res = !out;
const fn = (p) => p + 1;
