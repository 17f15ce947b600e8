var config = {};
const missing = void 0;
const total = parseInt("id");
config.id = Object.keys(config);
console.log(total);
const list = [2, 100, 1.5];
var cb = function () { return null; };
let title = String(total);
title = typeof total;
