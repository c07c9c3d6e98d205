"""Series and report output: CSV, JSON, and a self-contained SVG plot.

CSV and JSON writers use repr-exact floats and sorted keys so identical
inputs produce byte-identical files; timestamps are opt-in for that reason.
"""

from __future__ import annotations

import datetime
import json
import math
from xml.etree import ElementTree as ET

from ..series import ScalingSeries


def _open_write(path):
    try:
        return open(path, "w", encoding="utf-8", newline="\n")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc


def write_csv(series, path):
    """Columns ell,value,stderr with repr round-trip floats."""
    with _open_write(path) as fh:
        fh.write("ell,value,stderr\n")
        for ell, val, err in zip(series.ell, series.values, series.errors):
            fh.write(f"{ell!r},{val!r},{err!r}\n")
    return path


def read_csv(path):
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != "ell,value,stderr":
            raise ValueError(f"{path}: expected header 'ell,value,stderr', got {header!r}")
        ells, vals, errs = [], [], []
        for line in fh:
            line = line.strip()
            if not line:
                continue
            a, b, c = line.split(",")
            ells.append(float(a))
            vals.append(float(b))
            errs.append(float(c))
    return ScalingSeries(
        ell=tuple(ells), values=tuple(vals), errors=tuple(errs), meta={"source": str(path)}
    )


def write_json(record, path, stamp=False):
    """Serialize a ScalingSeries, VerifyReport, or plain dict to JSON."""
    if hasattr(record, "to_dict"):
        payload = record.to_dict()
    else:
        payload = dict(record)
    if stamp:
        payload = dict(payload)
        payload["written_at"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    with _open_write(path) as fh:
        fh.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return path


def read_series_json(path):
    with open(path, encoding="utf-8") as fh:
        return ScalingSeries.from_dict(json.load(fh))


_W, _H = 640, 480
_ML, _MR, _MT, _MB = 70, 20, 30, 50


def _ticks(lo, hi):
    """Decade tick positions covering [lo, hi] in log10 space."""
    first = math.floor(lo)
    last = math.ceil(hi)
    return [t for t in range(first, last + 1) if lo - 1e-9 <= t <= hi + 1e-9] or [first]


def _el(parent, tag, attrs):
    return ET.SubElement(parent, tag, {k: str(v) for k, v in attrs.items()})


def write_svg(series, path, overlay=None, title=""):
    """Log-log scatter of a series, optionally with an analytic overlay.

    ``overlay`` is a pair (ells, values) drawn as a dashed line.  All data
    must be positive (log axes).
    """
    xs = [float(e) for e in series.ell]
    ys = [float(v) for v in series.values]
    pairs = list(zip(xs, ys))
    if overlay is not None:
        pairs += list(zip(*overlay))
    if any(x <= 0 or y <= 0 for x, y in pairs):
        raise ValueError("log-log plot needs positive ell and values")

    lx = [math.log10(x) for x, _ in pairs]
    ly = [math.log10(y) for _, y in pairs]
    x0, x1 = min(lx), max(lx)
    y0, y1 = min(ly), max(ly)
    pad_x = 0.05 * (x1 - x0) + 1e-6
    pad_y = 0.05 * (y1 - y0) + 1e-6
    x0, x1 = x0 - pad_x, x1 + pad_x
    y0, y1 = y0 - pad_y, y1 + pad_y

    def px(v):
        return _ML + (math.log10(v) - x0) / (x1 - x0) * (_W - _ML - _MR)

    def py(v):
        return _H - _MB - (math.log10(v) - y0) / (y1 - y0) * (_H - _MT - _MB)

    svg = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(_W),
            "height": str(_H),
            "viewBox": f"0 0 {_W} {_H}",
        },
    )
    _el(svg, "rect", {"x": 0, "y": 0, "width": _W, "height": _H, "fill": "white"})
    _el(
        svg,
        "rect",
        {
            "x": _ML,
            "y": _MT,
            "width": _W - _ML - _MR,
            "height": _H - _MT - _MB,
            "fill": "none",
            "stroke": "black",
        },
    )

    for t in _ticks(x0, x1):
        x = f"{px(10.0 ** t):.2f}"
        _el(svg, "line", {"x1": x, "y1": _H - _MB, "x2": x, "y2": _H - _MB + 5, "stroke": "black"})
        lab = _el(
            svg,
            "text",
            {"x": x, "y": _H - _MB + 20, "text-anchor": "middle", "font-size": 12},
        )
        lab.text = f"1e{t}"
    for t in _ticks(y0, y1):
        y = py(10.0**t)
        _el(
            svg,
            "line",
            {"x1": _ML - 5, "y1": f"{y:.2f}", "x2": _ML, "y2": f"{y:.2f}", "stroke": "black"},
        )
        lab = _el(
            svg,
            "text",
            {"x": _ML - 8, "y": f"{y + 4:.2f}", "text-anchor": "end", "font-size": 12},
        )
        lab.text = f"1e{t}"

    if overlay is not None:
        o_ell, o_val = overlay
        pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(o_ell, o_val))
        _el(
            svg,
            "polyline",
            {
                "points": pts,
                "fill": "none",
                "stroke": "#888888",
                "stroke-width": "1.5",
                "stroke-dasharray": "6,3",
            },
        )

    pts = " ".join(f"{px(x):.2f},{py(y):.2f}" for x, y in zip(xs, ys))
    _el(svg, "polyline", {"points": pts, "fill": "none", "stroke": "#1f5fa8"})
    for x, y, e in zip(xs, ys, series.errors):
        if e > 0 and y - e > 0:
            _el(
                svg,
                "line",
                {
                    "x1": f"{px(x):.2f}",
                    "y1": f"{py(y - e):.2f}",
                    "x2": f"{px(x):.2f}",
                    "y2": f"{py(y + e):.2f}",
                    "stroke": "#1f5fa8",
                },
            )
        _el(
            svg,
            "circle",
            {"cx": f"{px(x):.2f}", "cy": f"{py(y):.2f}", "r": 3, "fill": "#1f5fa8"},
        )

    if title:
        t = _el(svg, "text", {"x": _W // 2, "y": 20, "text-anchor": "middle", "font-size": 14})
        t.text = title

    tree = ET.ElementTree(svg)
    try:
        tree.write(path, encoding="unicode", xml_declaration=True)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc
    return path
