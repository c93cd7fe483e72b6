import { ApiClient } from "./api.js";
import { BoardView } from "./board.js";
import { GameController } from "./state.js";

function bootstrap(): void {
  const app = document.getElementById("app");
  if (!app) throw new Error("missing #app element");

  const controller = new GameController(new ApiClient(""));

  const form = document.createElement("div");
  form.className = "controls";
  form.innerHTML = `
    <label>q <select id="q-select">
      <option>3</option><option selected>5</option>
      <option>7</option><option>9</option>
    </select></label>
    <label>scramble <input id="scramble" type="number" value="20" min="0"></label>
    <label>seed <input id="seed" type="number" placeholder="random"></label>
    <button id="new-game">new game</button>
    <button id="undo">undo</button>
  `;
  app.appendChild(form);

  const boardRoot = document.createElement("div");
  boardRoot.id = "board-root";
  app.appendChild(boardRoot);
  new BoardView(boardRoot, controller);

  const qSelect = form.querySelector<HTMLSelectElement>("#q-select")!;
  const scramble = form.querySelector<HTMLInputElement>("#scramble")!;
  const seed = form.querySelector<HTMLInputElement>("#seed")!;

  form.querySelector("#new-game")!.addEventListener("click", () => {
    const seedValue = seed.value === "" ? undefined : Number(seed.value);
    void controller.newGame(Number(qSelect.value), Number(scramble.value), seedValue);
  });
  form.querySelector("#undo")!.addEventListener("click", () => void controller.undo());

  void controller.newGame(Number(qSelect.value), Number(scramble.value), undefined);
}

bootstrap();
