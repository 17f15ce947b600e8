const y = [];
const cached = null;
console.log(y);
var settings = {};
settings = new Date();
