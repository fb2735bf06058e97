"""On-disk JSON form of a constructed code.

The artifact is self-contained: it stores the field, curve, subgroup, fibers,
generator matrix (row-major element encodings), repair groups and the per-fiber
local matrices, so a reloaded code can be verified without rebuilding it.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .autgroup import Subgroup
from .curve import CurveSpec, Point
from .errors import MalformedArtifact
from .funcfield import CurveFunction
from .lrc import EvaluationPlan, LrcCode, Provenance

FORMAT_VERSION = 1


def symbol_bytes(q: int) -> int:
    return max(1, ((q - 1).bit_length() + 7) // 8)


def _points(F, pts):
    return [P.to_json(F) for P in pts]


def code_to_dict(code: LrcCode, report: dict | None = None, seed: int | None = None) -> dict:
    F = code.field
    prov = code.provenance
    out = {
        "format_version": FORMAT_VERSION,
        "field": F.to_dict(),
        "symbol_bytes": symbol_bytes(F.q),
        "params": {"n": code.n, "k": code.k, "d": code.d, "r": code.r},
    }
    if prov is not None:
        out["params"].update({"t": prov.t, "ell": prov.ell})
        out["curve"] = prov.curve.to_dict()
        out["family"] = prov.family
        out["subgroup"] = prov.subgroup.to_list() if prov.subgroup is not None else None
        out["fibers"] = [_points(F, fib) for fib in prov.plan.fibers]
        out["excluded"] = _points(F, prov.plan.excluded)
        out["pole_fiber"] = _points(F, prov.pole_fiber)
        out["basis"] = list(prov.basis_labels)
        out["z"] = prov.z.to_dict() if prov.z is not None else None
        out["local_functions"] = [w.to_dict() for w in prov.local_functions]
        out["local_matrices"] = [np.asarray(M).tolist() for M in prov.local_matrices]
    out["seed"] = seed
    out["generator"] = code.generator.tolist()
    out["repair_groups"] = [list(g) for g in code.repair_groups]
    if report is not None:
        out["verification"] = report
    return out


def code_from_dict(d: dict) -> LrcCode:
    from .gf.field import FieldSpec

    try:
        if d.get("format_version") != FORMAT_VERSION:
            raise MalformedArtifact(f"unsupported format_version {d.get('format_version')!r}")
        F = FieldSpec.from_dict(d["field"])
        p = d["params"]
        n, k, r, dd = int(p["n"]), int(p["k"]), int(p["r"]), int(p["d"])
        G = np.array(d["generator"], dtype=np.int64)
        if G.shape != (k, n) or G.min(initial=0) < 0 or G.max(initial=0) >= F.q:
            raise MalformedArtifact("generator matrix has the wrong shape or out-of-range entries")
        groups = tuple(tuple(int(i) for i in g) for g in d["repair_groups"])
        prov = None
        if "curve" in d:
            curve = CurveSpec.from_dict(d["curve"])
            pt = lambda obj: Point.from_json(F, obj)
            plan = EvaluationPlan(tuple(tuple(pt(P) for P in fib) for fib in d["fibers"]),
                                  tuple(pt(P) for P in d["excluded"]))
            sub = Subgroup.from_list(curve, d["subgroup"]) if d.get("subgroup") else None
            z = CurveFunction.from_dict(curve, d["z"]) if d.get("z") else None
            prov = Provenance(
                curve, d["family"], sub, plan, tuple(pt(P) for P in d["pole_fiber"]),
                int(p["t"]), int(p["ell"]), z,
                tuple(CurveFunction.from_dict(curve, w) for w in d["local_functions"]),
                tuple(d["basis"]),
                tuple(np.array(M, dtype=np.int64) for M in d["local_matrices"]))
        return LrcCode(F, n, k, r, dd, G, groups, prov)
    except MalformedArtifact:
        raise
    except (KeyError, TypeError, ValueError, IndexError, AttributeError) as exc:
        raise MalformedArtifact(f"cannot read artifact: {exc}") from exc


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=1) + "\n"


def atomic_write(path: str | os.PathLike, data: bytes | str) -> None:
    path = Path(path)
    if isinstance(data, str):
        data = data.encode()
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def save_code(code: LrcCode, path, report: dict | None = None, seed: int | None = None) -> None:
    atomic_write(path, dumps(code_to_dict(code, report, seed)))


def load_code(path) -> LrcCode:
    try:
        d = json.loads(Path(path).read_text())
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MalformedArtifact(f"cannot read {path}: {exc}") from exc
    if not isinstance(d, dict):
        raise MalformedArtifact("artifact must be a JSON object")
    return code_from_dict(d)
