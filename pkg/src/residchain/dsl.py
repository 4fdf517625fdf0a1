"""Line-oriented description language for bunches of layer groups.

    # comment
    xi = O | E_id | E_nonid
    kappa = [t, u, v]          # ascending; the first label is the least
    class u = I | J
    group u = Z^2
    subgroup u = full | trivial | prefix 1
    hom t->u = trivial | identity | truncate 1 | matrix [[1],[0]]

Lines may come in any order. A hom omitted for u < w is filled in as the
composite through an intermediate label when one exists.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field

from .bunch import BunchOfLayerGroups, BunchError, KappaIndex, Xi
from .convert import Subgroup
from .ogroup import GroupError, Homomorphism, OrderedGroup


class DslError(ValueError):
    def __init__(self, message: str, line: int, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message, self.line, self.col = message, line, col


LABEL = r"[A-Za-z_][A-Za-z0-9_]*"
_LINE = re.compile(
    rf"""^\s*(?:
      (?P<xi_kw>xi)\s*=\s*(?P<xi>\S+)
    | (?P<kappa_kw>kappa)\s*=\s*\[(?P<kappa>[^\]]*)\]
    | (?P<class_kw>class)\s+(?P<class_label>{LABEL})\s*=\s*(?P<cls>\S+)
    | (?P<group_kw>group)\s+(?P<group_label>{LABEL})\s*=\s*Z\^(?P<rank>\d+)
    | (?P<sub_kw>subgroup)\s+(?P<sub_label>{LABEL})\s*=\s*(?P<sub>full|trivial|prefix\s+\d+)
    | (?P<hom_kw>hom)\s+(?P<src>{LABEL})\s*->\s*(?P<dst>{LABEL})\s*=\s*(?P<hom>.+?)
    )\s*$""",
    re.VERBOSE,
)
_HOM = re.compile(r"^(?:(trivial|identity)|truncate\s+(\d+)|matrix\s+(\[.*\]))$")


@dataclass
class BunchDocument:
    xi: Xi | None = None
    kappa: list[str] = field(default_factory=list)
    classes: dict[str, str] = field(default_factory=dict)
    groups: dict[str, int] = field(default_factory=dict)
    subgroups: dict[str, tuple] = field(default_factory=dict)  # label -> (kind, j)
    homs: dict[tuple[str, str], tuple] = field(default_factory=dict)  # (u, v) -> (kind, param)
    where: dict = field(default_factory=dict, compare=False, repr=False)

    def to_bunch(self) -> BunchOfLayerGroups:
        """Build the bunch; omitted homs become composites when possible."""
        if self.xi is None:
            raise DslError("missing 'xi = ...' line", 1)
        if not self.kappa:
            raise DslError("missing 'kappa = [...]' line", 1)
        kline = self.where.get("kappa", 1)
        try:
            index = KappaIndex(tuple(self.kappa), dict(self.classes), self.xi)
        except BunchError as exc:
            raise DslError(str(exc), kline) from None
        groups = {}
        for u in self.kappa:
            if u not in self.groups:
                raise DslError(f"no 'group {u} = Z^k' line", kline)
            groups[u] = OrderedGroup(self.groups[u])
        subgroups = {}
        for u in index.theta:
            if u not in self.subgroups:
                raise DslError(f"split label {u!r} needs a 'subgroup {u} = ...' line", kline)
        for u, (kind, j) in self.subgroups.items():
            sub = Subgroup.prefix(j) if kind == "prefix" else Subgroup(kind)
            try:
                sub.check_shape(groups[u])
            except ValueError as exc:
                raise DslError(str(exc), self.where[("subgroup", u)]) from None
            subgroups[u] = sub
        homs = {}
        for (u, v), (kind, param) in self.homs.items():
            src, dst = groups[u], groups[v]
            line = self.where[("hom", u, v)]
            try:
                if kind == "trivial":
                    homs[u, v] = Homomorphism.trivial(src, dst)
                elif kind == "identity":
                    homs[u, v] = Homomorphism(src, dst, "identity")
                elif kind == "truncate":
                    homs[u, v] = Homomorphism(src, dst, "truncate", param)
                else:
                    homs[u, v] = Homomorphism.matrix(src, dst, param)
            except GroupError as exc:
                raise DslError(f"hom {u}->{v}: {exc}", line) from None
        labels = self.kappa
        for span in range(2, len(labels)):
            for i in range(len(labels) - span):
                u, w = labels[i], labels[i + span]
                if (u, w) in homs:
                    continue
                for v in labels[i + 1: i + span]:
                    if (u, v) in homs and (v, w) in homs:
                        homs[u, w] = homs[u, v].then(homs[v, w])
                        break
        for u, v in index.pairs():
            if (u, v) not in homs:
                raise DslError(f"no hom {u}->{v} and no composite through an intermediate label", kline)
        return BunchOfLayerGroups(index, groups, subgroups, homs)


def parse_bunch_dsl(text: str) -> BunchDocument:
    doc = BunchDocument()
    seen: dict = {}
    pending = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _LINE.match(line)
        if m is None:
            col = len(line) - len(line.lstrip()) + 1
            raise DslError(f"cannot parse {line.strip()!r}", lineno, col)

        def once(key):
            if key in seen:
                raise DslError(f"duplicate {' '.join(map(str, key))} (first on line {seen[key]})", lineno)
            seen[key] = lineno
            doc.where[key if len(key) > 1 else key[0]] = lineno

        if m["xi_kw"]:
            once(("xi",))
            try:
                doc.xi = Xi(m["xi"])
            except ValueError:
                raise DslError(f"xi must be O, E_id or E_nonid, got {m['xi']!r}", lineno, m.start("xi") + 1) from None
        elif m["kappa_kw"]:
            once(("kappa",))
            items = [s.strip() for s in m["kappa"].split(",")] if m["kappa"].strip() else []
            for s in items:
                if not re.fullmatch(LABEL, s):
                    raise DslError(f"bad label {s!r}", lineno, m.start("kappa") + 1)
            doc.kappa = items
        elif m["class_kw"]:
            u = m["class_label"]
            once(("class", u))
            if m["cls"] not in ("I", "J"):
                raise DslError(f"class must be I or J, got {m['cls']!r}", lineno, m.start("cls") + 1)
            doc.classes[u] = m["cls"]
            pending.append((u, lineno, m.start("class_label") + 1))
        elif m["group_kw"]:
            u = m["group_label"]
            once(("group", u))
            doc.groups[u] = int(m["rank"])
            pending.append((u, lineno, m.start("group_label") + 1))
        elif m["sub_kw"]:
            u = m["sub_label"]
            once(("subgroup", u))
            parts = m["sub"].split()
            doc.subgroups[u] = (parts[0], int(parts[1]) if len(parts) > 1 else None)
            pending.append((u, lineno, m.start("sub_label") + 1))
        else:
            u, v = m["src"], m["dst"]
            once(("hom", u, v))
            hm = _HOM.match(m["hom"])
            if hm is None:
                raise DslError(f"unknown hom spec {m['hom']!r}", lineno, m.start("hom") + 1)
            if hm[1]:
                spec = (hm[1], None)
            elif hm[2]:
                spec = ("truncate", int(hm[2]))
            else:
                try:
                    rows = json.loads(hm[3])
                    if not (isinstance(rows, list) and all(isinstance(r, list) and all(isinstance(c, int) for c in r)
                                                           for r in rows)):
                        raise ValueError
                except ValueError:
                    raise DslError("matrix must be a list of integer rows", lineno, m.start("hom") + 1) from None
                spec = ("matrix", tuple(tuple(r) for r in rows))
            doc.homs[u, v] = spec
            pending.append((u, lineno, m.start("src") + 1))
            pending.append((v, lineno, m.start("dst") + 1))
            pending.append(((u, v), lineno, m.start("src") + 1))
    for item, lineno, col in pending:
        if isinstance(item, tuple):
            u, v = item
            if doc.kappa.index(u) >= doc.kappa.index(v):
                raise DslError(f"hom over non-increasing pair {u}->{v}", lineno, col)
        elif item not in doc.kappa:
            raise DslError(f"unknown label {item!r}", lineno, col)
    return doc


def print_bunch_dsl(doc: BunchDocument) -> str:
    lines = []
    if doc.xi is not None:
        lines.append(f"xi = {doc.xi.value}")
    lines.append("kappa = [" + ", ".join(doc.kappa) + "]")
    order = {u: i for i, u in enumerate(doc.kappa)}
    for u in sorted(doc.classes, key=order.get):
        lines.append(f"class {u} = {doc.classes[u]}")
    for u in sorted(doc.groups, key=order.get):
        lines.append(f"group {u} = Z^{doc.groups[u]}")
    for u in sorted(doc.subgroups, key=order.get):
        kind, j = doc.subgroups[u]
        lines.append(f"subgroup {u} = {kind}" + (f" {j}" if kind == "prefix" else ""))
    for (u, v) in sorted(doc.homs, key=lambda p: (order[p[0]], order[p[1]])):
        kind, param = doc.homs[u, v]
        if kind == "truncate":
            spec = f"truncate {param}"
        elif kind == "matrix":
            spec = "matrix " + json.dumps([list(r) for r in param], separators=(",", ":"))
        else:
            spec = kind
        lines.append(f"hom {u}->{v} = {spec}")
    return "\n".join(lines) + "\n"


def document_from_bunch(b: BunchOfLayerGroups) -> BunchDocument:
    """Describe a bunch built from Z^k groups and describable homs and subgroups."""
    doc = BunchDocument(xi=b.index.xi, kappa=[str(u) for u in b.index.labels])
    name = {u: str(u) for u in b.index.labels}
    doc.classes = {name[u]: c for u, c in b.index.classes.items()}
    for u, g in b.groups.items():
        if not isinstance(g, OrderedGroup):
            raise ValueError(f"group of {u!r} is not Z^k")
        doc.groups[name[u]] = g.rank
    for u, s in b.subgroups.items():
        if s.kind == "predicate":
            raise ValueError(f"subgroup of {u!r} has no description")
        doc.subgroups[name[u]] = (s.kind, s.j)
    for (u, v), h in b.homs.items():
        if h.kind == "map":
            raise ValueError(f"hom {u}->{v} has no description")
        doc.homs[name[u], name[v]] = (h.kind, h.param)
    return doc
