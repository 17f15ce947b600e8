var result = true;
let url = ",";
console.log(result);
result = url === "ok";
if (result) {
  result = false;
}
var a = ["ok", "a"];
var parts = ["", "ok"];
