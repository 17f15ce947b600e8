let options = { id: 3, name: "ok" };
let visible = true;
options.id = [];
const x = null;
let data = parseInt("hello");
let count = 0;
let data2 = new Date();
