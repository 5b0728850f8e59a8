const host: string = "localhost";
let port: number = 8080;
var mode = "dev";
