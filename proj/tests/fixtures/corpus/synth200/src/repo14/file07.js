let result = ["a", ","];
var parent = null;
result.push("ok");
var offset = 1.5;
const value = undefined;
const pending = undefined;
