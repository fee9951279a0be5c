"""Serializable documents (regions, gain reports, sweep grids) and SVG output.

Rationals are written as ``"p/q"`` strings (plain digits for integers) so
files round-trip exactly.
"""

from __future__ import annotations

import csv
import io
import json
import xml.etree.ElementTree as ET
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from ldic.converse import ConverseBounds, capacity_region, converse_bounds
from ldic.gains import GainReport, gain_report
from ldic.geometry import RateRegion, fmt, subset
from ldic.model import ChannelParams, classify_regimes, from_dict, to_dict


def _frac(s) -> Fraction:
    return Fraction(str(s))


@dataclass
class RegionEntry:
    params: ChannelParams
    bounds: ConverseBounds
    vertices: list[tuple[Fraction, Fraction]]
    regimes: tuple[str, str]

    @classmethod
    def build(cls, p: ChannelParams) -> RegionEntry:
        r = capacity_region(p)
        rp = classify_regimes(p)
        return cls(p, converse_bounds(p), list(r.vertices),
                   (str(rp.regime_1), str(rp.regime_2)))

    def to_dict(self) -> dict:
        return {
            "params": to_dict(self.params),
            "bounds": asdict(self.bounds),
            "vertices": [[fmt(x), fmt(y)] for x, y in self.vertices],
            "regimes": list(self.regimes),
        }

    @classmethod
    def from_dict(cls, d: dict) -> RegionEntry:
        return cls(
            from_dict(d["params"]),
            ConverseBounds(**d["bounds"]),
            [(_frac(x), _frac(y)) for x, y in d["vertices"]],
            tuple(d["regimes"]),
        )


def verdict(a: RateRegion, b: RateRegion) -> str:
    ab, ba = subset(a, b), subset(b, a)
    if ab and ba:
        return "equal"
    if ab:
        return "subset"
    if ba:
        return "superset"
    return "incomparable"


@dataclass
class RegionDocument:
    main: RegionEntry
    compare: RegionEntry | None = None
    verdict: str | None = None

    @classmethod
    def build(cls, p: ChannelParams, other: ChannelParams | None = None) -> RegionDocument:
        if other is None:
            return cls(RegionEntry.build(p))
        v = verdict(capacity_region(p), capacity_region(other))
        return cls(RegionEntry.build(p), RegionEntry.build(other), v)

    def to_dict(self) -> dict:
        d = {"kind": "region", "region": self.main.to_dict()}
        if self.compare is not None:
            d["compare"] = self.compare.to_dict()
            d["verdict"] = self.verdict
        return d

    @classmethod
    def from_dict(cls, d: dict) -> RegionDocument:
        cmp = d.get("compare")
        return cls(RegionEntry.from_dict(d["region"]),
                   RegionEntry.from_dict(cmp) if cmp else None, d.get("verdict"))

    def entries(self) -> list[RegionEntry]:
        return [self.main] + ([self.compare] if self.compare else [])

    def to_text(self) -> str:
        lines = []
        for e in self.entries():
            b = e.bounds
            lines.append(f"C({e.params})  regimes: {e.regimes[0]}, {e.regimes[1]}")
            lines.append(f"  R1 <= {b.r1_bound}   R2 <= {b.r2_bound}   "
                         f"R1+R2 <= {min(b.sum_bound_cutset, b.sum_bound_fb)}   "
                         f"2R1+R2 <= {b.two_r1_plus_r2}   R1+2R2 <= {b.r1_plus_two_r2}")
            lines.append("  vertices: " + " ".join(f"({fmt(x)},{fmt(y)})" for x, y in e.vertices))
        if self.verdict:
            lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["params", "index", "R1", "R2"])
        for e in self.entries():
            for k, (x, y) in enumerate(e.vertices):
                w.writerow([str(e.params), k, fmt(x), fmt(y)])
        return buf.getvalue()


# --- gain reports ------------------------------------------------------------

_REPORT_FIELDS = ("delta1", "delta2", "sigma", "argmax_rj_for_delta1", "argmax_rj_for_delta2")


def report_to_dict(r: GainReport, decimal: bool = False) -> dict:
    d = {"kind": "metrics", "params": to_dict(r.subject)}
    d.update({k: fmt(getattr(r, k)) for k in _REPORT_FIELDS})
    if decimal:
        d["decimal"] = {k: float(getattr(r, k)) for k in ("delta1", "delta2", "sigma")}
    return d


def report_from_dict(d: dict) -> GainReport:
    subject = from_dict(d["params"])
    return GainReport(**{k: _frac(d[k]) for k in _REPORT_FIELDS},
                      baseline=subject.with_feedback(0, 0), subject=subject)


def report_text(r: GainReport) -> str:
    lines = [f"params {r.subject}"]
    for name, label in (("delta1", "Delta1"), ("delta2", "Delta2"), ("sigma", "Sigma")):
        v = getattr(r, name)
        lines.append(f"  {label:<7}= {fmt(v):>6}  ({float(v):.6g})")
    lines.append(f"  Delta1 attained at R2 = {fmt(r.argmax_rj_for_delta1)}")
    lines.append(f"  Delta2 attained at R1 = {fmt(r.argmax_rj_for_delta2)}")
    return "\n".join(lines) + "\n"


# --- sweep grids -------------------------------------------------------------

GRID_COLUMNS = ("fb1", "fb2", "delta1", "delta2", "sigma")


@dataclass
class GridDocument:
    base: tuple[int, int, int, int]
    fb1: list[int]
    fb2: list[int]
    cells: list[list[tuple[Fraction, Fraction, Fraction]]] = field(default_factory=list)

    @classmethod
    def from_reports(cls, base, fb1, fb2, grid: list[list[GainReport]]) -> GridDocument:
        cells = [[(r.delta1, r.delta2, r.sigma) for r in row] for row in grid]
        return cls(tuple(base), list(fb1), list(fb2), cells)

    def rows(self):
        for a, row in zip(self.fb1, self.cells):
            for b, vals in zip(self.fb2, row):
                yield a, b, vals

    def cell(self, fb1: int, fb2: int):
        return self.cells[self.fb1.index(fb1)][self.fb2.index(fb2)]

    def to_dict(self) -> dict:
        return {
            "kind": "sweep",
            "base": list(self.base),
            "fb1": self.fb1,
            "fb2": self.fb2,
            "columns": list(GRID_COLUMNS),
            "rows": [[a, b, *map(fmt, vals)] for a, b, vals in self.rows()],
        }

    @classmethod
    def from_dict(cls, d: dict) -> GridDocument:
        width = len(d["fb2"])
        flat = [tuple(_frac(v) for v in row[2:]) for row in d["rows"]]
        cells = [flat[k:k + width] for k in range(0, len(flat), width)]
        return cls(tuple(d["base"]), list(d["fb1"]), list(d["fb2"]), cells)

    def to_csv(self, decimal: bool = False) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = list(GRID_COLUMNS)
        if decimal:
            header += [f"{c}_decimal" for c in GRID_COLUMNS[2:]]
        w.writerow(header)
        for a, b, vals in self.rows():
            row = [a, b, *map(fmt, vals)]
            if decimal:
                row += [f"{float(v):.6f}" for v in vals]
            w.writerow(row)
        return buf.getvalue()

    @classmethod
    def from_csv(cls, base, text: str) -> GridDocument:
        rows = list(csv.DictReader(io.StringIO(text)))
        fb1 = sorted({int(r["fb1"]) for r in rows})
        fb2 = sorted({int(r["fb2"]) for r in rows})
        doc = cls(tuple(base), fb1, fb2, [[None] * len(fb2) for _ in fb1])
        for r in rows:
            doc.cells[fb1.index(int(r["fb1"]))][fb2.index(int(r["fb2"]))] = tuple(
                _frac(r[c]) for c in GRID_COLUMNS[2:])
        return doc


def sweep_document(base, fb1: range, fb2: range, workers: int = 1) -> GridDocument:
    from ldic.gains import gain_surface

    return GridDocument.from_reports(base, fb1, fb2, gain_surface(base, fb1, fb2, workers))


def dumps(d: dict) -> str:
    return json.dumps(d, indent=2, sort_keys=True) + "\n"


# --- SVG ---------------------------------------------------------------------

_STYLES = {
    False: {"fill": "#3060c0", "fill-opacity": "0.25", "stroke": "#3060c0", "stroke-width": "1"},
    True: {"fill": "#c03030", "fill-opacity": "0.15", "stroke": "#c03030", "stroke-width": "3"},
}


def region_svg(entries: list[RegionEntry], size: int = 400, margin: int = 50) -> str:
    """Overlay plot of one or more regions; one ``<polygon>`` per region."""
    xmax = max([x for e in entries for x, _ in e.vertices] + [Fraction(1)])
    ymax = max([y for e in entries for _, y in e.vertices] + [Fraction(1)])
    scale = Fraction(size) / max(xmax, ymax)
    width, height = size + 2 * margin, size + 2 * margin + 20 * len(entries)

    def px(x, y):
        return float(margin + x * scale), float(margin + size - y * scale)

    svg = ET.Element("svg", xmlns="http://www.w3.org/2000/svg",
                     width=str(width), height=str(height), viewBox=f"0 0 {width} {height}")
    ox, oy = px(0, 0)
    ax, _ = px(xmax, 0)
    _, ay = px(0, ymax)
    axes = {"stroke": "black", "stroke-width": "1"}
    ET.SubElement(svg, "line", x1=str(ox), y1=str(oy), x2=str(ax), y2=str(oy), **axes)
    ET.SubElement(svg, "line", x1=str(ox), y1=str(oy), x2=str(ox), y2=str(ay), **axes)
    for val, label in ((xmax, fmt(xmax)), (0, "0")):
        x, _ = px(val, 0)
        ET.SubElement(svg, "text", x=str(x), y=str(oy + 15), **{"text-anchor": "middle"}).text = label
    _, y = px(0, ymax)
    ET.SubElement(svg, "text", x=str(ox - 5), y=str(y), **{"text-anchor": "end"}).text = fmt(ymax)
    ET.SubElement(svg, "text", x=str((ox + ax) / 2), y=str(oy + 35),
                  **{"text-anchor": "middle"}).text = "R1 [bits/ch.use]"
    ET.SubElement(svg, "text", x=str(ox - 30), y=str((oy + ay) / 2),
                  transform=f"rotate(-90 {ox - 30} {(oy + ay) / 2})",
                  **{"text-anchor": "middle"}).text = "R2 [bits/ch.use]"

    for k, e in enumerate(entries):
        has_fb = e.params.n11_fb > 0 or e.params.n22_fb > 0
        pts = " ".join("{:.3f},{:.3f}".format(*px(x, y)) for x, y in e.vertices)
        ET.SubElement(svg, "polygon", points=pts, **_STYLES[has_fb])
        label = ("with feedback" if has_fb else "without feedback") + f" C({e.params})"
        ly = size + 2 * margin + 20 * k + 10
        ET.SubElement(svg, "rect", x=str(margin), y=str(ly - 10), width="12", height="12",
                      **_STYLES[has_fb])
        ET.SubElement(svg, "text", x=str(margin + 20), y=str(ly)).text = label
    return ET.tostring(svg, encoding="unicode") + "\n"


__all__ = [
    "GridDocument", "RegionDocument", "RegionEntry", "dumps", "gain_report", "region_svg",
    "report_from_dict", "report_text", "report_to_dict", "sweep_document", "verdict",
]
