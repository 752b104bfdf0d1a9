import { initApp } from "./app";

initApp(document.getElementById("app") as HTMLElement, "");
