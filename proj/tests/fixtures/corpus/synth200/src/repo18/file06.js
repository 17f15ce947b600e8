const isReady = true;
const ids = [];
ids.push("hello");
let done = !isReady;
if (done) {
  done = false;
}
var data = ids.length;
