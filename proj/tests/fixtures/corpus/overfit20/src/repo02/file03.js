var total = 0;
const tmp = total >= 5;
const width = total + total * Math.max(total, 42);
const valid = width === 100;
const y = [100, 5, 0.25];
let out = "x-y";
