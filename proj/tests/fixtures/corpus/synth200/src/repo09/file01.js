let parts = [5, 7, 7];
const entries = parts.map(q => q * 2);
parts = ["x-y", ","];
entries.push(parseInt("World"));
const x = null;
const width = parseInt("x-y");
var isReady = width > 10;
isReady = width < 3;
parts = entries.map(q => q * 2);
