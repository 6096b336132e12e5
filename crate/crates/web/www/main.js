import init, { trigTable, transform, classes } from "./pkg/gf_hartley_web.js";

const $ = (id) => document.getElementById(id);

function kernel() {
  return [BigInt($("p").value), Number($("r").value), $("modulus").value, $("alpha").value];
}

function report(out, f) {
  out.classList.remove("error");
  try {
    f();
  } catch (e) {
    out.classList.add("error");
    out.textContent = e.message ?? String(e);
  }
}

function grid(title, rows) {
  const table = document.createElement("table");
  const caption = table.createCaption();
  caption.textContent = title;
  const head = table.insertRow();
  head.appendChild(document.createElement("th")).textContent = "k\\i";
  rows[0].forEach((_, i) => (head.appendChild(document.createElement("th")).textContent = i));
  rows.forEach((row, k) => {
    const tr = table.insertRow();
    tr.appendChild(document.createElement("th")).textContent = k;
    row.forEach((v) => (tr.insertCell().textContent = v));
  });
  return table;
}

await init();

$("show-table").onclick = () => {
  const out = $("table-out");
  report(out, () => {
    const doc = JSON.parse(trigTable(...kernel()));
    out.replaceChildren(grid("cos_k(i)", doc.cos), grid("sin_k(i)", doc.sin));
  });
};

for (const [id, inverse] of [["forward", false], ["inverse", true]]) {
  $(id).onclick = () => {
    const out = $("transform-out");
    report(out, () => {
      const result = transform(...kernel(), $("values").value, inverse);
      out.textContent = result;
      $("values").value = result;
    });
  };
}

$("classes").onclick = () => {
  const out = $("classes-out");
  report(out, () => {
    const doc = JSON.parse(classes(Number($("n").value), BigInt($("q").value)));
    out.textContent = doc.classes.map((c) => `C${c[0]} = (${c.join(",")})`).join("\n");
  });
};
