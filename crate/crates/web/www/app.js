// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at http://www.apache.org/licenses/LICENSE-2.0

import init, { presets, construct, lift, route_table } from "./pkg/oddimm_web.js";

const $ = (id) => document.getElementById(id);
let current = null; // last drawing
let base = null; // certificate on L(H), input of a lift

function status(msg, err) {
  $("status").textContent = msg;
  $("status").className = err ? "err" : "";
}

function hue(i, k) {
  return `hsl(${Math.round((360 * i) / Math.max(k, 1))} 70% 45%)`;
}

function draw() {
  const cv = $("canvas");
  const ctx = cv.getContext("2d");
  ctx.clearRect(0, 0, cv.width, cv.height);
  if (!current) return;
  const { n, edges, terminals, paths } = current;
  const r = cv.width / 2 - 30;
  const pos = [];
  for (let v = 0; v < n; v++) {
    const a = (2 * Math.PI * v) / n - Math.PI / 2;
    pos.push([cv.width / 2 + r * Math.cos(a), cv.height / 2 + r * Math.sin(a)]);
  }
  ctx.strokeStyle = "#ddd";
  ctx.lineWidth = 1;
  for (const [u, v] of edges) {
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  const pick = Number($("path").value);
  ctx.lineWidth = pick < 0 ? 2 : 4;
  paths.forEach((p, i) => {
    if (pick >= 0 && pick !== i) return;
    ctx.strokeStyle = hue(i, paths.length);
    ctx.beginPath();
    ctx.moveTo(...pos[p[0]]);
    for (const v of p.slice(1)) ctx.lineTo(...pos[v]);
    ctx.stroke();
  });
  const isTerm = new Set(terminals);
  ctx.font = "11px sans-serif";
  ctx.textAlign = "center";
  ctx.textBaseline = "middle";
  for (let v = 0; v < n; v++) {
    const t = isTerm.has(v);
    ctx.fillStyle = t ? "#111" : "#fff";
    ctx.strokeStyle = "#111";
    ctx.lineWidth = 1;
    ctx.beginPath();
    ctx.arc(...pos[v], t ? 9 : 6, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    if (n <= 60) {
      ctx.fillStyle = t ? "#fff" : "#111";
      ctx.fillText(String(v), ...pos[v]);
    }
  }
}

function show(result, label) {
  current = JSON.parse(result);
  const sel = $("path");
  sel.innerHTML = '<option value="-1">all</option>';
  current.paths.forEach((p, i) => {
    const o = document.createElement("option");
    o.value = i;
    o.textContent = `${i}: ${p[0]}-${p[p.length - 1]} (length ${p.length - 1})`;
    sel.appendChild(o);
  });
  $("report").textContent = current.report;
  $("events").textContent = [`case ${current.case}`, ...current.events].join("\n");
  status(`${label}: K_${current.t} on ${current.n} vertices`, !current.passed);
  draw();
}

function run(label, f) {
  try {
    show(f(), label);
  } catch (e) {
    status(String(e), true);
  }
}

$("construct").onclick = () => {
  run("L(H)", () => {
    const r = construct($("graph").value);
    base = JSON.parse(r).certificate;
    $("lift").disabled = false;
    return r;
  });
};

$("lift").onclick = () => {
  const m = Number($("m").value);
  run(`L(${m}H)`, () => lift($("graph").value, base, m));
};

$("graph").oninput = () => {
  base = null;
  $("lift").disabled = true;
};

$("path").onchange = draw;

$("route").onclick = () => {
  try {
    const t = JSON.parse(route_table(Number($("rm").value), Number($("rl").value)));
    let html = '<table class="route"><tr><td></td>';
    for (let j = 0; j < t.m; j++) html += `<td>to ${j}</td>`;
    html += "</tr>";
    t.rows.forEach((row, i) => {
      html += `<tr><td>from ${i}</td>`;
      for (const seq of row) html += `<td>${seq.join(" ")}</td>`;
      html += "</tr>";
    });
    html += "</table>";
    const ok = t.bijective.every((b) => b);
    html += `<p>every step a bijection on copy pairs: ${ok}</p>`;
    $("routes").innerHTML = html;
  } catch (e) {
    $("routes").textContent = String(e);
  }
};

await init();
const list = JSON.parse(presets());
for (const p of list) {
  const o = document.createElement("option");
  o.value = p.text;
  o.textContent = p.name;
  $("preset").appendChild(o);
}
$("preset").onchange = () => {
  $("graph").value = $("preset").value;
  $("graph").oninput();
};
$("graph").value = list.find((p) => p.name.startsWith("C5"))?.text ?? list[0].text;
