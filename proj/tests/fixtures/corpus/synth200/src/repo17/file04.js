var settings = {};
settings.name = [];
settings = new Date();
console.log(settings);
var prev = null;
settings = Object.assign({}, settings);
settings.id = parseInt("id");
