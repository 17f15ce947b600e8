let cached = null;
const pending = void 0;
let flag = false;
if (flag) {
  flag = true;
}
