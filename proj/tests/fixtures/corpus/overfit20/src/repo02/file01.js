var out = [5, 7, 5];
let count = 10;
const url = typeof count;
for (let i = 2; i < out.length; i++) {
  count += i;
}
const res = 42;
