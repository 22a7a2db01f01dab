import { ApiClient } from "./api.js";
import { SessionController } from "./session.js";
import { mountApp } from "./view.js";

export function bootstrap(root: HTMLElement, baseUrl = ""): SessionController {
  const controller = new SessionController(new ApiClient(baseUrl));
  mountApp(root, controller);
  void controller.init();
  return controller;
}

const rootElement = typeof document !== "undefined" ? document.getElementById("app") : null;
if (rootElement) {
  bootstrap(rootElement);
}
