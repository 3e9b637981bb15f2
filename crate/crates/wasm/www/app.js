import init, { analyze_code, gv, factor } from "./pkg/qcext_wasm.js";

const presets = {
  base: { schema: 1, q: 2, n: 7, f: "032321", g: "11" },
  one: { schema: 1, q: 2, n: 15, f: "1222", g: "1220310131", mode: "extend-one", x1: "(132)^5" },
  two: { schema: 1, q: 3, n: 10, f: "1521", g: "5310571", mode: "extend-two", x1: "1182122601", x2: "1738577032" },
  long: {
    schema: 1, q: 2, n: 51, f: "1111111111211112", g: "222102000311220302302021212000303321",
    mode: "extend-one", x1: "120003202330231302232303132122302133102030122013300",
  },
};

const $ = (id) => document.getElementById(id);

function show(id, fn) {
  const out = $(id);
  try {
    out.className = "";
    out.textContent = fn();
  } catch (e) {
    const err = JSON.parse(e);
    out.className = "error";
    out.textContent = `${err.code}: ${err.message}`;
  }
}

function loadPreset() {
  $("spec").value = JSON.stringify(presets[$("preset").value], null, 2);
  $("bookkeeping").checked = $("preset").value === "long";
}

await init();
loadPreset();
$("preset").onchange = loadPreset;

$("analyze").onclick = () =>
  show("analyze-out", () => JSON.parse(analyze_code($("spec").value, $("bookkeeping").checked)).text);

$("gv").onclick = () =>
  show("gv-out", () => {
    const num = (id) => Number($(id).value);
    return JSON.parse(gv(num("gv-q"), num("gv-n"), num("gv-k"), num("gv-d"))).text;
  });

$("factor").onclick = () =>
  show("factor-out", () => {
    const r = JSON.parse(factor(Number($("f-q").value), Number($("f-n").value)));
    const lines = r.factors.map((f) => `  ${f.poly}  (degree ${f.degree})`);
    return [`x^${r.n}-1 over GF(${r.field}): ${r.factors.length} irreducible factors`, ...lines].join("\n");
  });
