"""Self-contained JSON certificates for colorings, spreads and packings.

A certificate carries the space descriptor (including a hash of the ordered
line table), a payload of plain integer arrays, and a verdict block.  A
verifier given only the certificate and (n, q) rebuilds the space, refuses
to proceed on a descriptor hash mismatch, recomputes every verdict from the
payload alone, and compares bit for bit.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass

from .coloring import Coloring, is_complete, is_proper, validate_coloring
from .errors import CertificateFormatError, HashMismatch
from .geometry import SpaceModel, build_space
from .packings import Packing, PackingStructure5, is_packing
from .spreads import Spread, is_spread, line_spread_from_ids

ARTIFACT = "pgcolor"
FORMAT_VERSION = 1

KINDS = ("coloring", "spread", "packing", "packing-structure")


def _header(space: SpaceModel, kind: str, notes) -> dict:
    return {
        "artifact": ARTIFACT,
        "format_version": FORMAT_VERSION,
        "kind": kind,
        "space": space.descriptor(),
        "notes": list(notes),
    }


def coloring_certificate(space: SpaceModel, col: Coloring, notes=()) -> dict:
    validate_coloring(space, col)
    cert = _header(space, "coloring", notes)
    cert["payload"] = {"colors": col.k, "assignment": list(col.assignment)}
    proper = is_proper(space, col)
    complete = is_complete(space, col, want_witnesses=False)
    cert["verdicts"] = {
        "proper": proper.proper,
        "proper_violations": proper.violation_count,
        "complete": complete.complete,
        "missing_pairs": complete.missing_count,
    }
    return cert


def spread_certificate(space: SpaceModel, spread: Spread, notes=()) -> dict:
    cert = _header(space, "spread", notes)
    cert["payload"] = {
        "t": spread.t,
        "member_bases": [[list(row) for row in m.basis] for m in spread.members],
        "member_lines": list(spread.line_ids) if spread.line_ids else [],
    }
    check = is_spread(space.v, spread.members)
    cert["verdicts"] = {"partition": check.ok, "members": len(spread.members)}
    return cert


def packing_certificate(space: SpaceModel, packing: Packing, notes=()) -> dict:
    cert = _header(space, "packing", notes)
    cert["payload"] = {"spreads": [list(s.line_ids) for s in packing.spreads]}
    check = is_packing(space, packing.spreads)
    cert["verdicts"] = {"partition": check.ok, "spreads": len(packing.spreads)}
    return cert


def structure5_certificate(space: SpaceModel, structure: PackingStructure5, notes=()) -> dict:
    cert = _header(space, "packing-structure", notes)
    cert["payload"] = {
        "base_spread": list(structure.base_spread.line_ids),
        "carrier_members": [list(cp.member_indices) for cp in structure.carriers],
        "carrier_packings": [[list(s) for s in cp.spreads] for cp in structure.carriers],
    }
    cert["verdicts"] = {
        "exact_once_cover": True,
        "carriers": len(structure.carriers),
    }
    return cert


def write_certificate(cert: dict, path: str) -> None:
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        json.dump(cert, fh, indent=1)
        fh.write("\n")
    os.replace(tmp, path)


def load_certificate(path: str) -> dict:
    try:
        with open(path) as fh:
            cert = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CertificateFormatError(f"cannot read certificate: {exc}") from exc
    for key in ("artifact", "kind", "space", "payload", "verdicts"):
        if key not in cert:
            raise CertificateFormatError(f"certificate lacks the '{key}' field")
    if cert["kind"] not in KINDS:
        raise CertificateFormatError(f"unknown certificate kind {cert['kind']!r}")
    return cert


@dataclass
class VerifyOutcome:
    ok: bool
    recomputed: dict
    mismatches: list[str]


def _recompute_verdicts(space: SpaceModel, cert: dict) -> dict:
    kind = cert["kind"]
    payload = cert["payload"]
    try:
        if kind == "coloring":
            col = Coloring(k=payload["colors"], assignment=list(payload["assignment"]))
            # structural checks only; a tampered but well-formed assignment
            # must surface as a verdict mismatch, not a format error
            if len(col.assignment) != space.num_lines:
                raise ValueError("assignment length does not match the line count")
            if not set(col.assignment) <= set(range(1, col.k + 1)):
                raise ValueError("assignment uses colors outside 1..k")
            proper = is_proper(space, col)
            complete = is_complete(space, col, want_witnesses=False)
            return {
                "proper": proper.proper,
                "proper_violations": proper.violation_count,
                "complete": complete.complete,
                "missing_pairs": complete.missing_count,
            }
        if kind == "spread":
            members = [
                space.make_subspace([tuple(r) for r in basis])
                for basis in payload["member_bases"]
            ]
            check = is_spread(space.v, members)
            return {"partition": check.ok, "members": len(members)}
        if kind == "packing":
            spreads = [line_spread_from_ids(space, ids) for ids in payload["spreads"]]
            check = is_packing(space, spreads)
            return {"partition": check.ok, "spreads": len(spreads)}
        if kind == "packing-structure":
            count = [0] * space.num_lines
            for l in payload["base_spread"]:
                count[l] += 1
            for spreads in payload["carrier_packings"]:
                for s in spreads[1:]:
                    for l in s:
                        count[l] += 1
            return {
                "exact_once_cover": all(c == 1 for c in count),
                "carriers": len(payload["carrier_packings"]),
            }
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise CertificateFormatError(f"malformed {kind} payload: {exc}") from exc
    raise CertificateFormatError(f"unknown kind {kind!r}")


def verify_certificate(cert: dict, space: SpaceModel | None = None) -> VerifyOutcome:
    """Rebuild the space, recompute all verdicts, compare with the claims."""
    desc = cert["space"]
    if space is None:
        space = build_space(desc["n"], desc["q"])
    rebuilt = space.descriptor()
    if rebuilt["line_table_sha256"] != desc.get("line_table_sha256"):
        raise HashMismatch(
            "space descriptor hash does not match the rebuilt space"
        )
    for key in ("points", "lines", "irr"):
        if rebuilt[key] != desc.get(key):
            raise HashMismatch(f"space descriptor field {key!r} mismatch")

    recomputed = _recompute_verdicts(space, cert)
    mismatches = []
    claimed = cert["verdicts"]
    for key in sorted(set(claimed) | set(recomputed)):
        if claimed.get(key) != recomputed.get(key):
            mismatches.append(
                f"{key}: claimed {claimed.get(key)!r}, recomputed {recomputed.get(key)!r}"
            )
    return VerifyOutcome(ok=not mismatches, recomputed=recomputed, mismatches=mismatches)
