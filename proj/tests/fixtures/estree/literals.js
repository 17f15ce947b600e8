const r = /ab+c/gi;
const t = `x${r}y`;
let u = null, v = true, w = 2.5;
