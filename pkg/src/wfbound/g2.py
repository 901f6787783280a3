"""Table-driven checks for the exceptional group G2.

G2 has five geometric nilpotent orbits, totally ordered by closure::

    One < A1 < A1tilde < G2a1 < G2reg

All representation-theoretic input (Langlands parameters, Aubert-Zelevinsky
duals, wavefront sets, packets) is bundled data; this module only checks it.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from importlib import resources
from typing import Any


class G2Orbit(enum.IntEnum):
    One = 0
    A1 = 1
    A1tilde = 2
    G2a1 = 3
    G2reg = 4

    @classmethod
    def parse(cls, label: str) -> "G2Orbit":
        try:
            return cls[label]
        except KeyError:
            raise ValueError(f"unknown G2 orbit {label!r}") from None


def g2_dual(o: G2Orbit) -> G2Orbit:
    if o is G2Orbit.G2reg:
        return G2Orbit.One
    if o is G2Orbit.One:
        return G2Orbit.G2reg
    return G2Orbit.G2a1


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class G2Row:
    row_id: str
    block: str
    pi_label: str
    dual_param: G2Orbit
    az_label: str
    wf_of_az: tuple[G2Orbit, ...]  # one value, or the admissible values of an ambiguous cell
    is_generic_flag: bool | None
    is_trivial_flag: bool
    locator: str
    az_label_printed: str | None = None
    erratum: str | None = None

    @property
    def ambiguous(self) -> bool:
        return len(self.wf_of_az) > 1


@dataclass(frozen=True)
class G2Packet:
    packet_id: str
    dual_param: G2Orbit
    members: tuple[str, ...]
    generic_member_attains: bool
    erratum: str | None = None


@dataclass(frozen=True)
class G2SupercuspidalRow:
    locator: str
    dual_param: G2Orbit
    pi_label: str
    kwf_orbit: G2Orbit
    kwf_class: str
    ds_value: G2Orbit
    expected: str | None


@dataclass
class G2Tables:
    rows: list[G2Row]
    packets: list[G2Packet]
    supercuspidal: list[G2SupercuspidalRow]
    raw: dict[str, Any] = field(repr=False, default_factory=dict)


def _orbit(cell: Any, where: str) -> G2Orbit:
    if not isinstance(cell, str):
        raise TableError(f"{where}: expected an orbit label, got {cell!r}")
    try:
        return G2Orbit.parse(cell)
    except ValueError as e:
        raise TableError(f"{where}: {e}") from None


def parse_tables(raw: dict[str, Any]) -> G2Tables:
    rows = []
    for r in raw.get("tempered", []):
        where = r.get("locator") or r.get("id") or "tempered row"
        try:
            if r.get("wf_of_az") is None:
                wf = tuple(_orbit(x, where) for x in r["wf_of_az_options"])
            else:
                wf = (_orbit(r["wf_of_az"], where),)
            rows.append(
                G2Row(
                    row_id=r["id"],
                    block=r["block"],
                    pi_label=r["pi_label"],
                    dual_param=_orbit(r["dual_param"], where),
                    az_label=r["az_label"],
                    wf_of_az=wf,
                    is_generic_flag=r["az_generic"],
                    is_trivial_flag=bool(r["az_trivial"]),
                    locator=r["locator"],
                    az_label_printed=r.get("az_label_printed"),
                    erratum=r.get("erratum"),
                )
            )
        except KeyError as e:
            raise TableError(f"{where}: missing field {e}") from None
    ids = [r.row_id for r in rows]
    if len(ids) != len(set(ids)):
        raise TableError("duplicate tempered row ids")
    packets = []
    for p in raw.get("packets", []):
        where = p.get("id", "packet")
        for m in p.get("members", []):
            if m not in ids:
                raise TableError(f"{where}: unknown member {m!r}")
        packets.append(
            G2Packet(
                packet_id=where,
                dual_param=_orbit(p.get("dual_param"), where),
                members=tuple(p["members"]),
                generic_member_attains=bool(p.get("generic_member_attains")),
                erratum=p.get("erratum"),
            )
        )
    sc_rows = []
    for s in raw.get("depth_zero_supercuspidal", []):
        where = s.get("locator", "supercuspidal row")
        sc_rows.append(
            G2SupercuspidalRow(
                locator=where,
                dual_param=_orbit(s.get("dual_param"), where),
                pi_label=s.get("pi_label", ""),
                kwf_orbit=_orbit(s.get("kwf_orbit"), where),
                kwf_class=s.get("kwf_class", ""),
                ds_value=_orbit(s.get("ds_value"), where),
                expected=s.get("expected_ds_vs_param"),
            )
        )
    return G2Tables(rows, packets, sc_rows, raw)


def load_raw() -> dict[str, Any]:
    text = resources.files("wfbound").joinpath("data/g2_tables.json").read_text()
    return json.loads(text)


def load_tables() -> G2Tables:
    return parse_tables(load_raw())


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    failures: list[str] = field(default_factory=list)


def _compare(a: G2Orbit, b: G2Orbit) -> str:
    if a < b:
        return "less"
    if a > b:
        return "greater"
    return "equal"


def check_az_involution(t: G2Tables) -> CheckResult:
    """(a) The AZ column, read inside each block, is an involution."""
    by_block: dict[str, dict[str, G2Row]] = {}
    for r in t.rows:
        by_block.setdefault(r.block, {})[r.pi_label] = r
    failures = []
    for r in t.rows:
        block = by_block[r.block]
        image = block.get(r.az_label)
        if image is None:
            failures.append(f"{r.locator}: AZ label {r.az_label!r} is not a row of block {r.block!r}")
        elif image.az_label != r.pi_label:
            failures.append(f"{r.locator}: AZ(AZ({r.pi_label})) = {image.az_label}")
    printed = sum(1 for r in t.rows if r.az_label_printed)
    return CheckResult(
        "a", not failures, f"{len(t.rows)} rows; {printed} printed AZ labels corrected", failures
    )


def check_upper_bound(t: G2Tables) -> CheckResult:
    """(b) WF(AZ(pi)) <= d(O_pi) on every row."""
    failures = []
    equal = 0
    for r in t.rows:
        bound = g2_dual(r.dual_param)
        if any(w > bound for w in r.wf_of_az):
            failures.append(f"{r.locator}: {[w.name for w in r.wf_of_az]} not <= {bound.name}")
        elif not r.ambiguous and r.wf_of_az[0] == bound:
            equal += 1
    amb = sum(1 for r in t.rows if r.ambiguous)
    return CheckResult(
        "b",
        not failures,
        f"{len(t.rows)} rows, {equal} attain equality, {amb} ambiguous row(s) excluded from equality count",
        failures,
    )


def check_packets(t: G2Tables) -> CheckResult:
    """(c) every packet has a member attaining equality."""
    rows = {r.row_id: r for r in t.rows}
    failures = []
    for p in t.packets:
        bound = g2_dual(p.dual_param)
        members = [rows[m] for m in p.members]
        for m in members:
            if m.dual_param != p.dual_param:
                failures.append(f"{p.packet_id}: member {m.row_id} has parameter {m.dual_param.name}")
        hit = any(not m.ambiguous and m.wf_of_az[0] == bound for m in members)
        if not hit and p.generic_member_attains:
            # the generic member of the packet is regular; only ambiguous cells can carry it
            hit = any(m.ambiguous and bound in m.wf_of_az for m in members)
        if not hit:
            failures.append(f"{p.packet_id}: no member attains {bound.name}")
    return CheckResult("c", not failures, f"{len(t.packets)} packets", failures)


_ALLOWED_WF = {G2Orbit.G2reg, G2Orbit.G2a1, G2Orbit.One}


def check_wavefront_values(t: G2Tables) -> CheckResult:
    """(d) wavefront sets of AZ duals avoid A1 and A1tilde; One only for the
    trivial representation, G2reg exactly for generic ones."""
    failures = []
    for r in t.rows:
        for w in r.wf_of_az:
            if w not in _ALLOWED_WF:
                failures.append(f"{r.locator}: wavefront {w.name} is not allowed")
        if r.ambiguous:
            continue
        w = r.wf_of_az[0]
        if (w is G2Orbit.One) != r.is_trivial_flag:
            failures.append(f"{r.locator}: wavefront {w.name} but trivial flag {r.is_trivial_flag}")
        if r.is_generic_flag is not None and (w is G2Orbit.G2reg) != r.is_generic_flag:
            failures.append(f"{r.locator}: wavefront {w.name} but generic flag {r.is_generic_flag}")
    return CheckResult("d", not failures, f"{len(t.rows)} rows", failures)


def check_supercuspidal(t: G2Tables) -> CheckResult:
    """(e) d_S of the unramified wavefront set against the parameter, plus the
    upper bound on the geometric wavefront set."""
    failures = []
    verdicts = []
    for s in t.supercuspidal:
        verdict = _compare(s.ds_value, s.dual_param)
        verdicts.append(verdict)
        if s.expected is not None and verdict != s.expected:
            failures.append(f"{s.locator}: d_S {s.ds_value.name} vs {s.dual_param.name} is {verdict}, expected {s.expected}")
        if s.kwf_orbit > g2_dual(s.dual_param):
            failures.append(f"{s.locator}: wavefront {s.kwf_orbit.name} above {g2_dual(s.dual_param).name}")
    seen = sorted(set(verdicts))
    if seen != ["equal", "greater", "less"]:
        failures.append(f"expected all three verdicts, saw {seen}")
    detail = ", ".join(f"{s.locator}={v}" for s, v in zip(t.supercuspidal, verdicts))
    return CheckResult("e", not failures, detail, failures)


CHECKS = (check_az_involution, check_upper_bound, check_packets, check_wavefront_values, check_supercuspidal)


def verify_g2(tables: G2Tables | None = None) -> list[CheckResult]:
    if tables is None:
        tables = load_tables()
    return [check(tables) for check in CHECKS]
