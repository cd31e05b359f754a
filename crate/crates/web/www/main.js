import init, { circle, diamond, stokes } from "./pkg/kt_hodge_web.js";

const $ = (id) => document.getElementById(id);

function fail(target, e) {
  target.innerHTML = "";
  const span = document.createElement("span");
  span.className = "err";
  span.textContent = String(e);
  target.appendChild(span);
}

function frame(canvas, xmin, xmax, ymin, ymax) {
  const ctx = canvas.getContext("2d");
  const pad = 24;
  const sx = (canvas.width - 2 * pad) / (xmax - xmin);
  const sy = (canvas.height - 2 * pad) / (ymax - ymin);
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const X = (x) => pad + (x - xmin) * sx;
  const Y = (y) => canvas.height - pad - (y - ymin) * sy;
  ctx.strokeStyle = "#bbb";
  ctx.beginPath();
  ctx.moveTo(X(xmin), Y(0)); ctx.lineTo(X(xmax), Y(0));
  ctx.moveTo(X(0), Y(ymin)); ctx.lineTo(X(0), Y(ymax));
  ctx.stroke();
  return { ctx, X, Y, sx, sy };
}

function drawCircle() {
  try {
    const r = JSON.parse(circle($("c-d").value, $("c-rho").value));
    $("c-out").textContent = `h^{0,1} = ${r.count}: ` + r.points.map(([l, m]) => `(${l},${m})`).join(" ");
    const reach = Math.max(r.semi_l, r.semi_m) + 1;
    const c = r.center;
    const { ctx, X, Y, sx, sy } = frame($("c-canvas"), c - reach * 1.3, c + reach * 1.3, -reach, reach);
    ctx.strokeStyle = "#36c";
    ctx.beginPath();
    ctx.ellipse(X(c), Y(0), r.semi_l * sx, r.semi_m * sy, 0, 0, 2 * Math.PI);
    ctx.stroke();
    ctx.fillStyle = "#ddd";
    for (let l = Math.floor(c - reach * 1.3); l <= c + reach * 1.3; l++) {
      for (let m = Math.floor(-reach); m <= reach; m++) {
        ctx.fillRect(X(l) - 1, Y(m) - 1, 2, 2);
      }
    }
    ctx.fillStyle = "#c33";
    for (const [l, m] of r.points) {
      ctx.beginPath();
      ctx.arc(X(l), Y(m), 4, 0, 2 * Math.PI);
      ctx.fill();
    }
  } catch (e) {
    fail($("c-out"), e);
  }
}

function drawDiamond() {
  try {
    const r = JSON.parse(diamond($("h-a").value, $("h-d").value, $("h-rho").value));
    $("h-out").textContent = r.text;
    const rows = [];
    for (let p = 0; p < 3; p++) {
      for (let q = 0; q < 3; q++) rows.push(`h${p}${q}=${r.h[p][q]} (${r.provenance[p][q]})`);
    }
    $("h-prov").textContent = rows.join(", ");
  } catch (e) {
    $("h-out").textContent = "";
    fail($("h-prov"), e);
  }
}

function drawStokes() {
  try {
    const ratio = Number($("s-ratio").value);
    const seed = Number.parseInt($("s-seed").value, 10) >>> 0;
    const r = JSON.parse(stokes(ratio, seed));
    const verdict = r.solvable ? "solvable" : "not solvable";
    $("s-out").textContent = `${r.case}, ${verdict}; angle between the two lines at 0: ${r.angle.toExponential(2)}`;
    const all = r.left.concat(r.right);
    const ys = all.map(([, y]) => y);
    const { ctx, X, Y } = frame($("s-canvas"), -r.window, r.window, Math.min(...ys, -1), Math.max(...ys, 1));
    for (const [curve, colour] of [[r.left, "#c33"], [r.right, "#36c"]]) {
      ctx.strokeStyle = colour;
      ctx.beginPath();
      curve.forEach(([x, y], i) => (i ? ctx.lineTo(X(x), Y(y)) : ctx.moveTo(X(x), Y(y))));
      ctx.stroke();
    }
  } catch (e) {
    fail($("s-out"), e);
  }
}

await init();
$("c-go").onclick = drawCircle;
$("h-go").onclick = drawDiamond;
$("s-go").onclick = drawStokes;
drawCircle();
drawDiamond();
drawStokes();
