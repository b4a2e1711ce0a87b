import { ApiClient } from "./api.js";
import { App } from "./app.js";

const root = document.getElementById("app");
if (root instanceof HTMLElement) {
  void new App(new ApiClient(""), root).init();
}
