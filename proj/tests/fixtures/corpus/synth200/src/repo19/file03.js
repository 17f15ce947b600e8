const parts = ["", ""];
const res = null;
var items = [1.5, 100, 2];
items.push(items.length);
items = items.map(q => q * 2);
items = [];
