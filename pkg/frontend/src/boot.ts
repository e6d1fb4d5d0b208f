/** Entry point for the built page: mount onto #app against same-origin service. */

import { ApiClient } from "./api.js";
import { mountApp } from "./main.js";

const root = document.getElementById("app");
if (root !== null) {
  mountApp(root, new ApiClient(""));
}
