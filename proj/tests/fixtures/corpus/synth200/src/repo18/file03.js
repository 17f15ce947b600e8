var item = new Date();
item.enabled = true;
console.log(item);
let label = JSON.stringify(item);
let cached = null;
item.name = label.split("id");
