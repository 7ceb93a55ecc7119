"""Command-line front end: problem files in, validated reports out.

A problem file is a single JSON object declaring a grading group, a
bicharacter, an algebra, and optionally a module, named parameter
families, a scan grid, and options.  ``parse_spec`` resolves the file
against the declared group and collects every schema problem it finds,
each located by a JSON path, instead of stopping at the first.

Commands (``run``): validate | commutator | cohomology | verify-theorem |
scan | h0.  Reports go to stdout; diagnostics and warnings go to stderr.
Exit codes: 0 all checks pass, 1 a check failed (identity violations,
unequal theorem dimensions, failing grid points), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .algebra import (
    AlgebraError,
    ColorAlgebra,
    LieColorAlgebra,
    algebra_from_json,
    commutator_algebra,
    validate_left_symmetric,
    validate_lie_color,
)
from .bimodule import (
    Bimodule,
    BimoduleError,
    module_from_json,
    natural_bimodule,
    trivial_bimodule,
    validate_bimodule,
)
from .cohomology import (
    CohomologyError,
    build_lsca_complex,
    cohomology_table,
    verify_main_theorem,
)
from .grading import (
    BicharacterError,
    GradingError,
    bichar_from_json,
    group_from_json,
)
from .scalars import CycScalar, parse_scalar, scalar_to_json
from .variety import VarietyError, family_from_json, parse_grid, scan_csv, scan_family

COMMANDS = ("validate", "commutator", "cohomology", "verify-theorem", "scan", "h0")

_TOP_KEYS = {"name", "group", "bicharacter", "algebra", "module",
             "family", "families", "grid", "options"}
_ALGEBRA_KEYS = {"lie", "basis", "products"}
_MODULE_KEYS = {"basis", "left", "right"}
_OPTION_KEYS = {"max_n", "strict", "force"}


class SpecError(ValueError):
    """One schema problem, located by a JSON path like $.algebra.products[2]."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


class SpecErrorList(ValueError):
    """Everything wrong with one problem file, in document order."""

    def __init__(self, errors):
        self.errors = list(errors)
        super().__init__("; ".join(str(e) for e in self.errors))


class ProblemSpec:
    """A parsed problem file with every reference resolved.

    ``module`` is the resolved coefficient bimodule (None only when the
    algebra is a bracket algebra); ``module_decl`` keeps the declared form
    ("natural", "trivial", or the explicit object) for reporting and
    round-tripping.  ``families`` maps names to FamilySpec instances.
    """

    def __init__(self, name, group, eps, algebra, module, module_decl,
                 families, grid, options):
        self.name = name
        self.group = group
        self.eps = eps
        self.algebra = algebra
        self.module = module
        self.module_decl = module_decl
        self.families = families
        self.grid = grid
        self.options = options

    @property
    def is_lie(self) -> bool:
        return isinstance(self.algebra, LieColorAlgebra)


# ---------------------------------------------------------------------------
# parsing

def parse_spec(text: str) -> ProblemSpec:
    """Parse and fully resolve a problem file.

    Raises SpecErrorList carrying every located schema error if anything
    is malformed: unknown keys, wrong degree arity, unresolved basis
    labels, malformed scalars, grading violations.
    """
    errors: list[SpecError] = []
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecErrorList([SpecError("$", f"not valid JSON: {exc}")])
    if not isinstance(raw, dict):
        raise SpecErrorList([SpecError("$", "problem file must be a JSON object")])

    for key in sorted(set(raw) - _TOP_KEYS):
        errors.append(SpecError(f"$.{key}", "unknown key"))

    name = raw.get("name", "A")
    if not isinstance(name, str) or not name:
        errors.append(SpecError("$.name", "must be a non-empty string"))
        name = "A"

    options = _parse_options(raw.get("options"), errors)

    group = None
    try:
        group = group_from_json(raw.get("group"))
    except (GradingError, TypeError) as exc:
        errors.append(SpecError("$.group", str(exc)))

    eps = None
    if group is not None:
        bobj = raw.get("bicharacter")
        if isinstance(bobj, dict) and options["strict"] is not None \
                and bobj.get("mode") == "table":
            bobj = dict(bobj, strict=options["strict"])
        try:
            eps = bichar_from_json(group, bobj)
        except (BicharacterError, GradingError, ValueError) as exc:
            errors.append(SpecError("$.bicharacter", str(exc)))

    algebra = None
    if "algebra" not in raw:
        errors.append(SpecError("$.algebra", "missing"))
    elif group is not None and eps is not None:
        algebra = _parse_algebra(group, eps, raw["algebra"], errors)

    module = None
    module_decl = raw.get("module", "natural")
    if algebra is not None:
        if isinstance(algebra, LieColorAlgebra):
            if "module" in raw:
                errors.append(SpecError(
                    "$.module",
                    "coefficient modules attach to left-symmetric algebras; "
                    "remove the key for a bracket algebra"))
        else:
            module = _parse_module(algebra, module_decl, errors)

    families = {}
    if "family" in raw and "families" in raw:
        errors.append(SpecError("$.family", "give either family or families, not both"))
    elif algebra is not None:
        decls = {"family": raw["family"]} if "family" in raw else raw.get("families", {})
        if not isinstance(decls, dict):
            errors.append(SpecError("$.families", "must be an object of named families"))
            decls = {}
        for fname, fobj in decls.items():
            path = "$.family" if "family" in raw else f"$.families.{fname}"
            try:
                families[fname] = family_from_json(algebra.space, algebra.eps, fobj)
            except (VarietyError, ValueError) as exc:
                errors.append(SpecError(path, str(exc)))

    grid = {}
    if "grid" in raw:
        try:
            grid = parse_grid(raw["grid"])
        except (ValueError, TypeError) as exc:
            errors.append(SpecError("$.grid", str(exc)))

    if errors:
        raise SpecErrorList(errors)
    return ProblemSpec(name, group, eps, algebra, module, module_decl,
                       families, grid, options)


def _parse_options(obj, errors):
    options = {"max_n": 3, "strict": None, "force": False}
    if obj is None:
        return options
    if not isinstance(obj, dict):
        errors.append(SpecError("$.options", "must be an object"))
        return options
    for key in sorted(set(obj) - _OPTION_KEYS):
        errors.append(SpecError(f"$.options.{key}", "unknown option"))
    if "max_n" in obj:
        if isinstance(obj["max_n"], int) and 0 <= obj["max_n"] <= 6:
            options["max_n"] = obj["max_n"]
        else:
            errors.append(SpecError("$.options.max_n", "must be an integer in 0..6"))
    for key in ("strict", "force"):
        if key in obj:
            if isinstance(obj[key], bool):
                options[key] = obj[key]
            else:
                errors.append(SpecError(f"$.options.{key}", "must be a boolean"))
    return options


def _check_degree(group, value, path, errors) -> bool:
    if not isinstance(value, list) or not all(isinstance(c, int) for c in value):
        errors.append(SpecError(path, "degree must be a list of integers"))
        return False
    if len(value) != group.rank:
        errors.append(SpecError(
            path, f"degree has {len(value)} components, the group has rank "
                  f"{group.rank}"))
        return False
    return True


def _walk_basis(group, obj, path, errors):
    """Validate a basis declaration list; returns name -> reduced degree."""
    table = {}
    if not isinstance(obj, list) or not obj:
        errors.append(SpecError(path, "must be a non-empty list"))
        return table
    for i, entry in enumerate(obj):
        here = f"{path}[{i}]"
        if not isinstance(entry, dict) or "name" not in entry or "degree" not in entry:
            errors.append(SpecError(here, "needs name and degree"))
            continue
        nm = entry["name"]
        if not isinstance(nm, str) or not nm:
            errors.append(SpecError(f"{here}.name", "must be a non-empty string"))
            continue
        if nm in table:
            errors.append(SpecError(f"{here}.name", f"duplicate basis label {nm!r}"))
            continue
        if _check_degree(group, entry["degree"], f"{here}.degree", errors):
            table[nm] = group.degree(entry["degree"])
    return table


def _walk_terms(terms, labels, path, errors):
    """Validate a result combination [{"basis","coeff"}]; returns degree set."""
    hit = []
    if not isinstance(terms, list):
        errors.append(SpecError(path, "result must be a list of terms"))
        return hit
    for j, term in enumerate(terms):
        here = f"{path}[{j}]"
        if not isinstance(term, dict) or "basis" not in term or "coeff" not in term:
            errors.append(SpecError(here, "needs basis and coeff"))
            continue
        if term["basis"] not in labels:
            errors.append(SpecError(
                f"{here}.basis", f"unresolved basis label {term['basis']!r}"))
            continue
        try:
            c = parse_scalar(term["coeff"])
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            errors.append(SpecError(f"{here}.coeff", f"malformed scalar: {exc}"))
            continue
        if not c.is_zero():
            hit.append(term["basis"])
    return hit


def _parse_algebra(group, eps, obj, errors):
    if not isinstance(obj, dict):
        errors.append(SpecError("$.algebra", "must be an object"))
        return None
    for key in sorted(set(obj) - _ALGEBRA_KEYS):
        errors.append(SpecError(f"$.algebra.{key}", "unknown key"))
    lie = obj.get("lie", False)
    if not isinstance(lie, bool):
        errors.append(SpecError("$.algebra.lie", "must be a boolean"))
        lie = False
    degrees = _walk_basis(group, obj.get("basis"), "$.algebra.basis", errors)
    if not degrees:
        return None

    products = obj.get("products", [])
    if not isinstance(products, list):
        errors.append(SpecError("$.algebra.products", "must be a list"))
        products = []
    before = len(errors)
    for i, entry in enumerate(products):
        here = f"$.algebra.products[{i}]"
        if not isinstance(entry, dict) or not {"left", "right", "result"} <= set(entry):
            errors.append(SpecError(here, "needs left, right, result"))
            continue
        sides = []
        for side in ("left", "right"):
            if entry[side] not in degrees:
                errors.append(SpecError(
                    f"{here}.{side}", f"unresolved basis label {entry[side]!r}"))
            else:
                sides.append(degrees[entry[side]])
        hits = _walk_terms(entry["result"], degrees, f"{here}.result", errors)
        if len(sides) == 2:
            target = sides[0] + sides[1]
            for nm in hits:
                if degrees[nm] != target:
                    errors.append(SpecError(
                        here,
                        f"result {nm!r} has degree {degrees[nm]} but "
                        f"{entry['left']}*{entry['right']} forces {target}"))
    if len(errors) > before:
        return None
    try:
        return algebra_from_json(group, eps, obj, lie=lie)
    except (AlgebraError, GradingError, ValueError) as exc:
        errors.append(SpecError("$.algebra", str(exc)))
        return None


def _parse_module(A, decl, errors):
    if decl in ("natural", "trivial", None):
        return module_from_json(A, decl)
    if not isinstance(decl, dict):
        errors.append(SpecError(
            "$.module", 'must be "natural", "trivial", or an explicit object'))
        return None
    for key in sorted(set(decl) - _MODULE_KEYS):
        errors.append(SpecError(f"$.module.{key}", "unknown key"))
    vlabels = _walk_basis(A.space.group, decl.get("basis"), "$.module.basis", errors)
    if not vlabels:
        return None
    alabels = set(A.space.names)
    before = len(errors)
    for side in ("left", "right"):
        entries = decl.get(side, [])
        if not isinstance(entries, list):
            errors.append(SpecError(f"$.module.{side}", "must be a list"))
            continue
        for i, entry in enumerate(entries):
            here = f"$.module.{side}[{i}]"
            if not isinstance(entry, dict) or not {"x", "v", "result"} <= set(entry):
                errors.append(SpecError(here, "needs x, v, result"))
                continue
            if entry["x"] not in alabels:
                errors.append(SpecError(
                    f"{here}.x", f"unresolved basis label {entry['x']!r}"))
            if entry["v"] not in vlabels:
                errors.append(SpecError(
                    f"{here}.v", f"unresolved basis label {entry['v']!r}"))
            _walk_terms(entry["result"], vlabels, f"{here}.result", errors)
    if len(errors) > before:
        return None
    try:
        return module_from_json(A, decl)
    except (BimoduleError, GradingError, ValueError) as exc:
        errors.append(SpecError("$.module", str(exc)))
        return None


# ---------------------------------------------------------------------------
# emission (round-trip support)

def spec_to_json(spec: ProblemSpec) -> dict:
    """Serialize a parsed spec; parse_spec(json.dumps(...)) returns an
    identical spec (same emission, same resolved objects)."""
    out = {
        "name": spec.name,
        "group": {"orders": list(spec.group.orders)},
        "bicharacter": _bichar_json(spec.eps),
        "algebra": _algebra_json(spec.algebra),
    }
    if spec.is_lie:
        pass
    elif isinstance(spec.module_decl, str) or spec.module_decl is None:
        out["module"] = spec.module_decl or "natural"
    else:
        out["module"] = _module_json(spec.module)
    if spec.families:
        out["families"] = {nm: _family_json(fam)
                           for nm, fam in sorted(spec.families.items())}
    if spec.grid:
        out["grid"] = {nm: [_scalar_json(v) for v in vals]
                       for nm, vals in sorted(spec.grid.items())}
    options = {"max_n": spec.options["max_n"], "force": spec.options["force"]}
    if spec.options["strict"] is not None:
        options["strict"] = spec.options["strict"]
    out["options"] = options
    return out


def _scalar_json(v):
    return scalar_to_json(v if isinstance(v, CycScalar) else CycScalar.rational(v))


def _bichar_json(eps):
    if eps.mode == "form":
        return {"mode": "form", "matrix": [list(row) for row in eps.matrix],
                "root_order": eps.root_m}
    return {"mode": "table",
            "degrees": [list(d.components) for d in eps.degrees],
            "values": [[scalar_to_json(v) for v in row] for row in eps.values],
            "strict": eps.strict}


def _combo_json(space, vec):
    return [{"basis": space.names[k], "coeff": scalar_to_json(c)}
            for k, c in enumerate(vec) if not c.is_zero()]


def _algebra_json(A):
    space = A.space
    out = {
        "basis": [{"name": nm, "degree": list(d.components)}
                  for nm, d in zip(space.names, space.degrees)],
        "products": [
            {"left": space.names[i], "right": space.names[j],
             "result": _combo_json(space, vec)}
            for (i, j), vec in sorted(A.products.items())
        ],
    }
    if isinstance(A, LieColorAlgebra):
        out["lie"] = True
    return out


def _module_json(V: Bimodule):
    aspace, vspace = V.algebra.space, V.space
    return {
        "basis": [{"name": nm, "degree": list(d.components)}
                  for nm, d in zip(vspace.names, vspace.degrees)],
        "left": [
            {"x": aspace.names[i], "v": vspace.names[w],
             "result": _combo_json(vspace, vec)}
            for (i, w), vec in sorted(V.left.items())
        ],
        "right": [
            {"v": vspace.names[w], "x": aspace.names[i],
             "result": _combo_json(vspace, vec)}
            for (w, i), vec in sorted(V.right.items())
        ],
    }


def _family_json(fam):
    space = fam.space

    def slot_json(slot):
        i, j, k = slot
        return {"left": space.names[i], "right": space.names[j],
                "result": space.names[k]}

    return {
        "free": [dict(slot_json(slot), parameter=nm) for slot, nm in fam.free],
        "fixed": [dict(slot_json(slot), value=_scalar_json(v))
                  for slot, v in sorted(fam.fixed.items())],
    }


# ---------------------------------------------------------------------------
# report formatting

def _fmt_degree(deg) -> str:
    return "(" + ",".join(str(c) for c in deg) + ")"


def _fmt_residual(res: dict) -> str:
    return ", ".join(f"{nm} -> {c!r}" for nm, c in res.items())


_TAGS = {"skew", "jacobi", "bm1", "bm2", "module", "c0"}


def _violation_lines(bad):
    lines = []
    for key, res in bad:
        if key and key[0] in _TAGS:
            head = f"{key[0]} ({', '.join(str(p) for p in key[1:])})"
        else:
            head = f"({', '.join(str(p) for p in key)})"
        lines.append(f"  {head}: {_fmt_residual(res)}")
    return lines


def _fmt_vector(space, vec) -> str:
    terms = []
    for k, c in enumerate(vec):
        if c.is_zero():
            continue
        if c == CycScalar.one():
            terms.append(space.names[k])
        elif c == -CycScalar.one():
            terms.append(f"-{space.names[k]}")
        else:
            terms.append(f"{c!r}*{space.names[k]}")
    return " + ".join(terms) if terms else "0"


def _aligned(header, rows) -> list:
    table = [header] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[c]) for r in table) for c in range(len(header))]
    lines = []
    for idx, row in enumerate(table):
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return lines


def _forward_warnings(caught, err):
    for w in caught:
        print(f"warning: {w.message}", file=err)


# ---------------------------------------------------------------------------
# commands

def run(command: str, spec: ProblemSpec, max_n=None, module=None, n=None,
        family=None, json_path=None, out=None, err=None) -> int:
    """Execute one command against a parsed spec; returns the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    if command not in COMMANDS:
        print(f"unknown command {command!r}", file=err)
        return 2
    if json_path is not None and command not in ("cohomology", "h0", "verify-theorem"):
        print("--json applies to cohomology, h0, and verify-theorem", file=err)
        return 2
    if command == "validate":
        return _cmd_validate(spec, out)
    if command == "commutator":
        return _cmd_commutator(spec, out, err)
    if command == "scan":
        return _cmd_scan(spec, family, out, err)

    # the remaining commands run the cochain machinery over a bimodule
    if spec.is_lie:
        print(f"{command} expects a left-symmetric algebra; this problem "
              f"file declares a bracket algebra", file=err)
        return 2
    resolved = _resolve_module(spec, module, err)
    if resolved is None:
        return 2
    V, vlabel = resolved
    if command == "cohomology":
        depth = spec.options["max_n"] if max_n is None else max_n
        return _cmd_cohomology(spec, V, vlabel, depth, json_path, out, err)
    if command == "h0":
        return _cmd_h0(spec, V, vlabel, json_path, out, err)
    return _cmd_verify(spec, V, vlabel, 1 if n is None else n, json_path, out, err)


def _resolve_module(spec, module, err):
    if module in (None, "spec"):
        return spec.module, ("explicit" if isinstance(spec.module_decl, dict)
                             else (spec.module_decl or "natural"))
    if module == "natural":
        return natural_bimodule(spec.algebra), "natural"
    if module == "trivial":
        return trivial_bimodule(spec.algebra), "trivial"
    print(f"unknown module {module!r}: use natural, trivial, or spec", file=err)
    return None


def _cmd_validate(spec, out) -> int:
    checks = []
    if spec.is_lie:
        checks.append(("bracket axioms (skew + jacobi)",
                       validate_lie_color(spec.algebra),
                       spec.algebra.dim ** 2 + spec.algebra.dim ** 3))
    else:
        checks.append(("left-symmetric identity",
                       validate_left_symmetric(spec.algebra),
                       spec.algebra.dim ** 3))
        if isinstance(spec.module_decl, dict):
            checks.append(("bimodule axioms (bm1 + bm2)",
                           validate_bimodule(spec.module), None))
    failed = False
    for label, bad, total in checks:
        if bad:
            failed = True
            counted = f"{len(bad)}" + (f" of {total}" if total else "")
            print(f"{label}: FAIL ({counted} checks)", file=out)
            for line in _violation_lines(bad):
                print(line, file=out)
        else:
            print(f"{label}: PASS", file=out)
    return 1 if failed else 0


def _cmd_commutator(spec, out, err) -> int:
    if spec.is_lie:
        print("commutator expects a left-symmetric algebra; this problem "
              "file already declares a bracket algebra", file=err)
        return 2
    try:
        L = commutator_algebra(spec.algebra, force=spec.options["force"])
    except AlgebraError as exc:
        print(f"commutator refused: {exc}", file=out)
        return 1
    space = L.space
    printed = False
    for i in range(L.dim):
        for j in range(i, L.dim):
            vec = L.product(i, j)
            if any(not c.is_zero() for c in vec):
                printed = True
                print(f"[{space.names[i]}, {space.names[j]}] = "
                      f"{_fmt_vector(space, vec)}", file=out)
    if not printed:
        print("all brackets vanish", file=out)
    return 0


def _entries_report(spec, vlabel, entries, checks=None) -> dict:
    return {
        "algebra": spec.name,
        "module": vlabel,
        "entries": entries,
        "theorem_checks": checks or [],
    }


def _write_json(report, json_path, err) -> bool:
    try:
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    except OSError as exc:
        print(f"cannot write {json_path}: {exc}", file=err)
        return False
    return True


def _cmd_cohomology(spec, V, vlabel, max_n, json_path, out, err) -> int:
    if not 0 <= max_n <= 6:
        print("--max-n must be in 0..6", file=err)
        return 2
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        cx = build_lsca_complex(spec.algebra, V, max_n)
        entries = cohomology_table(cx)
    _forward_warnings(caught, err)
    rows = [[e["n"], _fmt_degree(e["degree"]), e["dimC"], e["dimZ"],
             e["dimB"], e["dimH"]] for e in entries]
    for line in _aligned(["n", "degree", "dimC", "dimZ", "dimB", "dimH"], rows):
        print(line, file=out)
    if json_path is not None:
        if not _write_json(_entries_report(spec, vlabel, entries), json_path, err):
            return 2
    return 0


def _cmd_h0(spec, V, vlabel, json_path, out, err) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        cx = build_lsca_complex(spec.algebra, V, 0)
        entries = cohomology_table(cx)
    _forward_warnings(caught, err)
    hits = [e for e in entries if e["n"] == 0 and e["dimH"] > 0]
    if hits:
        for e in hits:
            print(f"dim H0 = {e['dimH']} at degree {_fmt_degree(e['degree'])}",
                  file=out)
    else:
        print("dim H0 = 0", file=out)
    if json_path is not None:
        report = _entries_report(spec, vlabel, [e for e in entries if e["n"] == 0])
        if not _write_json(report, json_path, err):
            return 2
    return 0


def _cmd_verify(spec, V, vlabel, n, json_path, out, err) -> int:
    if n < 1:
        print("--n must be at least 1", file=err)
        return 2
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            report = verify_main_theorem(spec.algebra, V, n,
                                         force=spec.options["force"])
        _forward_warnings(caught, err)
    except CohomologyError as exc:
        print(f"theorem check at n={n}: REFUSED ({exc})", file=out)
        return 1
    rows = [[_fmt_degree(c["degree"]), c["lhs"], c["rhs"],
             "yes" if c["equal"] else "NO",
             "yes" if c["intertwining_zero"] else "NO"]
            for c in report["checks"]]
    for line in _aligned(["degree", "dim H^{n+1}(A,V)", "dim H^n([A],C1)",
                          "equal", "intertwining"], rows):
        print(line, file=out)
    ok = report["equal"] and report["intertwining_zero"]
    print(f"theorem check at n={n}: {'PASS' if ok else 'FAIL'}", file=out)
    if json_path is not None:
        if not _write_json(_entries_report(spec, vlabel, [], report["checks"]),
                           json_path, err):
            return 2
    return 0 if ok else 1


def _cmd_scan(spec, family, out, err) -> int:
    if not spec.families:
        print("the problem file declares no parameter family", file=err)
        return 2
    if family is None:
        if len(spec.families) > 1:
            print(f"--family required: choose one of "
                  f"{', '.join(sorted(spec.families))}", file=err)
            return 2
        family = next(iter(spec.families))
    fam = spec.families.get(family)
    if fam is None:
        print(f"unknown family {family!r}: the file declares "
              f"{', '.join(sorted(spec.families))}", file=err)
        return 2
    try:
        results = scan_family(fam, grid=spec.grid or None)
    except VarietyError as exc:
        print(str(exc), file=err)
        return 2
    print(scan_csv(results), file=out)
    return 0 if all(r["passes"] for r in results) else 1


# ---------------------------------------------------------------------------
# entry point

def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="colorhom",
        description="Exact cohomology of left-symmetric color algebras: "
                    "validate structure constants, build cochain complexes, "
                    "scan parameter families.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("spec", help="path to a problem JSON file")
    ap.add_argument("--max-n", dest="max_n", type=int, default=None,
                    help="highest cochain level for the cohomology table")
    ap.add_argument("--module", choices=["natural", "trivial", "spec"],
                    default=None,
                    help="coefficient module (default: the file's declaration)")
    ap.add_argument("--n", type=int, default=None,
                    help="level for verify-theorem (compares H^{n+1} with H^n)")
    ap.add_argument("--family", default=None,
                    help="family name for scan (default: the only one declared)")
    ap.add_argument("--json", dest="json_path", default=None,
                    help="also write the machine-readable report to this path")
    args = ap.parse_args(argv)

    try:
        with open(args.spec, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read {args.spec}: {exc}", file=sys.stderr)
        return 2
    try:
        spec = parse_spec(text)
    except SpecErrorList as exc:
        for e in exc.errors:
            print(f"schema error at {e.path}: {e.message}", file=sys.stderr)
        return 2
    return run(args.command, spec, max_n=args.max_n, module=args.module,
               n=args.n, family=args.family, json_path=args.json_path)


if __name__ == "__main__":
    sys.exit(main())
