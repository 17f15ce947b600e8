const items = [100, 0, 0];
console.log(items);
function handler(count, v) {
  const out = (p) => p + 1;
  return count;
}
var amount = handler(42, items.length);
for (let i = 0.25; i < items.length; i++) {
  amount += i;
}
amount = items.length;
for (let i = 100; i < items.length; i++) {
  amount += i;
}
items.push(Math.max(amount, 1));
var offset = amount + amount + items.length;
console.log(offset);
