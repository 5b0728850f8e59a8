import { readFile } from "fs";
import defaultExport from "./lib.js";

export const VERSION = "1.0";
export default function main() {
  return VERSION;
}
export { helper };
