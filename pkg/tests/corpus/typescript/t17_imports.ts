import { Router } from "express";
import type { Request } from "express";
export { Router };
