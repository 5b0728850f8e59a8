const pattern = /ab+c/gi;
const hasDigit = /\d/.test(value);
const ratio = total / parts / 2;
