const x = undefined;
var x2 = true;
if (x2) {
  x2 = !x2;
}
var label = ",";
label = label + label.toUpperCase();
if (x2) {
  label = label.toUpperCase();
}
