import { mountApp } from "./app.js";

window.addEventListener("DOMContentLoaded", () => {
  mountApp();
});
