"""Curated catalog of weighted homogeneous potentials with expected invariants.

Each record pins a potential at a concrete weight triple together with the
invariant values it is expected to have: rigidity index, GK-dimension of the
singular quotient, vacancy and sealedness verdicts, and whether the
singularity at the origin is isolated.  ``verify_entry`` recomputes all of
them from scratch and reports agreement item by item.

Every numeric expectation in the data file was confirmed by an independent
computation before being frozen.  Entries whose vacancy or sealedness verdict
is "no" carry a witness degree (the smallest degree where a nonzero dimension
appears) so verification knows how far it must look.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .ring import Polynomial, Weights
from .textio import parse_poly
from .poisson import (
    from_potential,
    jacobiator,
    modular_derivation,
    rgt,
)
from .jacobian import gkdim, has_isolated_singularity
from .complexes import ph_dims, sealed_k1_dims, vacancy_check
from .hilbert import closed_form_ph

DATA_PATH = Path(__file__).resolve().parent / "data" / "catalog.txt"

TYPE_LABELS = ("i", "q", "bw", "nw", "r")
VERDICTS = ("yes", "no", "unknown")

# filter-key -> weight shape predicate
_TABLE_SHAPES: Dict[str, Callable[[int, int, int], bool]] = {
    "111": lambda a, b, c: (a, b, c) == (1, 1, 1),
    "112": lambda a, b, c: (a, b, c) == (1, 1, 2),
    "123": lambda a, b, c: (a, b, c) == (1, 2, 3),
    "aabc": lambda a, b, c: a == b < c and (a, b, c) != (1, 1, 2),
    "abbc": lambda a, b, c: a < b == c,
    "abc": lambda a, b, c: a < b < c and (a, b, c) != (1, 2, 3),
}


class CatalogError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    entry_id: str
    weights: Weights
    omega_text: str
    omega: Polynomial
    type_label: str
    irreducible: bool
    # exact expectation or a range; exactly one of the pair is set
    expected_rgt: Optional[int]
    rgt_bound: Optional[int]          # expectation: rgt <= rgt_bound
    expected_gk: Optional[int]
    gk_choices: Optional[Tuple[int, ...]]
    expected_vacant: str
    expected_sealed: str
    expected_isolated: bool
    table: str
    family: Optional[str]
    lam: Optional[Fraction]
    asterisk: bool
    conditions: Tuple[str, ...]
    vacancy_witness: Optional[int]
    sealed_witness: Optional[int]
    notes: str

    @property
    def degree(self) -> int:
        return self.weights.n_default

    def rgt_matches(self, value: int) -> bool:
        if self.expected_rgt is not None:
            return value == self.expected_rgt
        return value <= self.rgt_bound

    def gk_matches(self, value: int) -> bool:
        if self.expected_gk is not None:
            return value == self.expected_gk
        return value in self.gk_choices

    def describe_rgt(self) -> str:
        if self.expected_rgt is not None:
            return str(self.expected_rgt)
        return "<=%d" % self.rgt_bound

    def describe_gk(self) -> str:
        if self.expected_gk is not None:
            return str(self.expected_gk)
        return "or".join(str(v) for v in self.gk_choices)


@dataclass
class ReportItem:
    name: str
    status: str                 # pass / fail / info
    expected: str
    computed: str
    detail: str = ""


@dataclass
class EntryReport:
    entry: CatalogEntry
    max_degree: int
    items: List[ReportItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(item.status != "fail" for item in self.items)

    @property
    def failures(self) -> List[ReportItem]:
        return [item for item in self.items if item.status == "fail"]


@dataclass
class CatalogReport:
    reports: List[EntryReport]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def mismatch_count(self) -> int:
        return sum(len(r.failures) for r in self.reports)


def _check_conditions(entry_id, weights, conds, params):
    a, b, c = weights
    for cond in conds:
        if cond == "c=k*a":
            k = params.get("k")
            if k is None or c != k * a or a != b:
                raise CatalogError("%s: condition c=k*a fails" % entry_id)
        elif cond == "c!=k*a":
            if a != b or c % a == 0:
                raise CatalogError("%s: condition c!=k*a fails" % entry_id)
        elif cond == "c=a+b":
            if c != a + b:
                raise CatalogError("%s: condition c=a+b fails" % entry_id)
        elif cond == "c=m*a+n*b":
            m, n = params.get("m"), params.get("n")
            if m is None or n is None or c != m * a + n * b:
                raise CatalogError("%s: condition c=m*a+n*b fails" % entry_id)
        elif cond == "c!=m*a+n*b":
            hits = [(m, n) for m in range(1, c // a + 1)
                    for n in range(1, c // b + 1) if m * a + n * b == c]
            if hits:
                raise CatalogError("%s: c is m*a+n*b via %s" % (entry_id, hits))
        elif cond == "c=lcm(a,b)-a-b":
            if c != lcm(a, b) - a - b:
                raise CatalogError("%s: condition c=lcm(a,b)-a-b fails" % entry_id)
        elif cond == "a-div-b":
            if b % a != 0:
                raise CatalogError("%s: condition a|b fails" % entry_id)
        elif cond == "a-ndiv-b":
            if b % a == 0:
                raise CatalogError("%s: condition a∤b fails" % entry_id)
        elif cond == "b!=2*a":
            if b == 2 * a:
                raise CatalogError("%s: condition b!=2a fails" % entry_id)
        else:
            raise CatalogError("%s: unknown condition %r" % (entry_id, cond))


def _parse_record(line: str) -> CatalogEntry:
    parts = [p.strip() for p in line.split("|")]
    if len(parts) != 11:
        raise CatalogError("record needs 11 fields, got %d: %r" % (len(parts), line))
    (eid, wtxt, omtext, typ, irr_s, rgt_s, gk_s, vac, seal, iso_s, notes) = parts
    try:
        a, b, c = (int(t) for t in wtxt.split(","))
    except ValueError:
        raise CatalogError("%s: bad weights %r" % (eid, wtxt))
    try:
        weights = Weights(a, b, c)
    except Exception as exc:
        raise CatalogError("%s: %s" % (eid, exc))
    if typ not in TYPE_LABELS:
        raise CatalogError("%s: bad type %r" % (eid, typ))
    if vac not in VERDICTS or seal not in VERDICTS:
        raise CatalogError("%s: bad verdict" % eid)
    if irr_s not in ("true", "false") or iso_s not in ("true", "false"):
        raise CatalogError("%s: bad boolean" % eid)
    irreducible = irr_s == "true"
    isolated = iso_s == "true"
    if irreducible != (typ != "r"):
        raise CatalogError("%s: type %r inconsistent with irreducible=%s"
                           % (eid, typ, irreducible))
    if rgt_s.startswith("<="):
        expected_rgt, rgt_bound = None, int(rgt_s[2:])
    else:
        expected_rgt, rgt_bound = int(rgt_s), None
    if "or" in gk_s:
        expected_gk, gk_choices = None, tuple(int(t) for t in gk_s.split("or"))
    else:
        expected_gk, gk_choices = int(gk_s), None

    omega = parse_poly(omtext, weights)
    n = weights.n_default
    if not omega.is_homogeneous() or omega.homogeneous_degree() != n:
        raise CatalogError("%s: potential not homogeneous of degree %d" % (eid, n))

    table = None
    family = None
    lam = None
    asterisk = False
    vacancy_witness = None
    sealed_witness = None
    conds: List[str] = []
    params: Dict[str, int] = {}
    for token in notes.split(";"):
        token = token.strip()
        if not token:
            continue
        if token.startswith("table="):
            table = token[6:]
        elif token.startswith("family="):
            family = token[7:]
        elif token.startswith("lambda="):
            lam = Fraction(token[7:])
        elif token == "asterisk":
            asterisk = True
        elif token.startswith("vacwit="):
            vacancy_witness = int(token[7:])
        elif token.startswith("sealwit="):
            sealed_witness = int(token[8:])
        elif token.startswith("cond="):
            conds.append(token[5:])
        elif token in ("k", "m", "n"):
            raise CatalogError("%s: bare parameter token" % eid)
        elif len(token) > 2 and token[1] == "=" and token[0] in "kmn":
            params[token[0]] = int(token[2:])
        # remaining tokens are free-form annotations
    if table not in _TABLE_SHAPES:
        raise CatalogError("%s: missing or unknown table key %r" % (eid, table))
    if not _TABLE_SHAPES[table](a, b, c):
        raise CatalogError("%s: weights %s do not fit group %r" % (eid, (a, b, c), table))
    _check_conditions(eid, (a, b, c), conds, params)
    if expected_rgt is not None and (expected_rgt == 0) != irreducible:
        raise CatalogError("%s: rgt %d inconsistent with irreducible=%s"
                           % (eid, expected_rgt, irreducible))
    if expected_rgt is None and irreducible:
        raise CatalogError("%s: irreducible entry needs exact rgt 0" % eid)
    if expected_vacant_requires_witness(vac) and vacancy_witness is None:
        raise CatalogError("%s: vacant=no needs vacwit" % eid)
    if expected_vacant_requires_witness(seal) and sealed_witness is None:
        raise CatalogError("%s: sealed=no needs sealwit" % eid)
    if isolated and typ != "i":
        raise CatalogError("%s: isolated entries must have type i" % eid)
    return CatalogEntry(
        entry_id=eid, weights=weights, omega_text=omtext, omega=omega,
        type_label=typ, irreducible=irreducible,
        expected_rgt=expected_rgt, rgt_bound=rgt_bound,
        expected_gk=expected_gk, gk_choices=gk_choices,
        expected_vacant=vac, expected_sealed=seal, expected_isolated=isolated,
        table=table, family=family, lam=lam, asterisk=asterisk,
        conditions=tuple(conds), vacancy_witness=vacancy_witness,
        sealed_witness=sealed_witness, notes=notes)


def expected_vacant_requires_witness(verdict: str) -> bool:
    return verdict == "no"


def _load(path: Optional[Path] = None) -> List[CatalogEntry]:
    path = Path(path) if path is not None else DATA_PATH
    entries: List[CatalogEntry] = []
    seen = set()
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            entry = _parse_record(line)
            if entry.entry_id in seen:
                raise CatalogError("duplicate id %s" % entry.entry_id)
            seen.add(entry.entry_id)
            entries.append(entry)
    _sanity(entries)
    return entries


def _sanity(entries: Sequence[CatalogEntry]) -> None:
    """Structural invariants of the shipped data, checked on every load."""
    free112 = [e for e in entries if e.table == "112" and e.lam is None]
    if len(free112) != 16:
        raise CatalogError("expected 16 parameter-free (1,1,2) entries, got %d"
                           % len(free112))
    ifams = {e.family for e in entries if e.type_label == "i"}
    if len(ifams) != 3 or None in ifams:
        raise CatalogError("expected exactly 3 isolated families, got %r" % ifams)
    for e in entries:
        if e.type_label == "i" and not e.expected_isolated:
            raise CatalogError("%s: type i must be isolated" % e.entry_id)
        if e.type_label == "r" and e.expected_rgt is not None and e.expected_rgt > -1:
            raise CatalogError("%s: reducible rgt must be <= -1" % e.entry_id)
        if e.type_label in ("nw", "r"):
            if e.expected_vacant != "no" or e.expected_sealed != "no":
                raise CatalogError("%s: %s entries are non-vacant and unsealed"
                                   % (e.entry_id, e.type_label))
    spot = {"111-i-a": "bw", "112-i-a": "bw", "112-r-a": "r", "123-i-a": "nw",
            "112-i-f": "q", "abc-i-b1": "nw", "abc-i-f1": "nw", "111-i-c1": "i"}
    for eid, typ in spot.items():
        hit = [e for e in entries if e.entry_id == eid]
        if len(hit) != 1 or hit[0].type_label != typ:
            raise CatalogError("spot check failed for %s" % eid)


_CACHE: Optional[List[CatalogEntry]] = None


def entries(selector: Optional[str] = None,
            path: Optional[Path] = None) -> List[CatalogEntry]:
    """Catalog entries in file order, optionally filtered.

    Selectors: ``table:112``, ``type:i``, ``weights:1,2,3``, an entry id,
    or None for everything.
    """
    global _CACHE
    if path is not None:
        data = _load(path)
    else:
        if _CACHE is None:
            _CACHE = _load()
        data = list(_CACHE)
    if selector is None:
        return data
    sel = selector.strip()
    if sel.startswith("table:"):
        key = sel[6:]
        if key not in _TABLE_SHAPES:
            raise CatalogError("unknown table key %r" % key)
        return [e for e in data if e.table == key]
    if sel.startswith("type:"):
        key = sel[5:]
        if key not in TYPE_LABELS:
            raise CatalogError("unknown type label %r" % key)
        return [e for e in data if e.type_label == key]
    if sel.startswith("weights:"):
        try:
            w = tuple(int(t) for t in sel[8:].split(","))
        except ValueError:
            raise CatalogError("bad weights selector %r" % sel)
        if len(w) != 3:
            raise CatalogError("bad weights selector %r" % sel)
        return [e for e in data if e.weights.tuple == w]
    exact = [e for e in data if e.entry_id == sel]
    if exact:
        return exact
    raise CatalogError("unknown selector %r" % selector)


def _check_yes_no(name, verdict, dims_items, witness, report, bound):
    """Shared shape for the vacancy and sealedness items."""
    nonzero = sorted(d for d, v in dims_items if v)
    if verdict == "yes":
        status = "pass" if not nonzero else "fail"
        computed = "all zero to %d" % bound if not nonzero else \
            "nonzero at %s" % nonzero[:6]
        report.items.append(ReportItem(name, status, "yes", computed))
    elif verdict == "no":
        status = "pass" if nonzero else "fail"
        computed = ("nonzero at %s" % nonzero[:6]) if nonzero else \
            "all zero to %d" % bound
        detail = "" if witness is None else "recorded witness %d" % witness
        report.items.append(ReportItem(name, status, "no", computed, detail))
    else:
        computed = ("nonzero at %s" % nonzero[:6]) if nonzero else \
            "all zero to %d" % bound
        report.items.append(ReportItem(name, "info", "unknown", computed))


def verify_entry(entry: CatalogEntry, max_degree: Optional[int] = None,
                 checks: Optional[Sequence[str]] = None) -> EntryReport:
    """Recompute the entry's invariants and compare with expectations.

    ``max_degree`` bounds the degree-truncated checks (vacancy, sealedness,
    cohomology tables); it defaults to deg(omega)+6.  Exact checks
    (jacobiator, modular vector field, rigidity, GK-dimension, isolated
    singularity) do not depend on it.  ``checks`` restricts to a subset of
    {"structure", "rgt", "gk", "isolated", "vacancy", "sealed", "cohomology"}.
    """
    n = entry.degree
    D = max_degree if max_degree is not None else n + 6
    want = set(checks) if checks is not None else {
        "structure", "rgt", "gk", "isolated", "vacancy", "sealed", "cohomology"}
    report = EntryReport(entry=entry, max_degree=D)
    omega = entry.omega

    if "structure" in want:
        s = from_potential(omega)
        jz = jacobiator(s).is_zero()
        report.items.append(ReportItem(
            "jacobiator", "pass" if jz else "fail", "0",
            "0" if jz else "nonzero"))
        mz = modular_derivation(s).is_zero()
        report.items.append(ReportItem(
            "modular", "pass" if mz else "fail", "0",
            "0" if mz else "nonzero"))
    if "rgt" in want:
        r = rgt(omega)
        report.items.append(ReportItem(
            "rgt", "pass" if entry.rgt_matches(r) else "fail",
            entry.describe_rgt(), str(r)))
    if "gk" in want:
        g = gkdim(omega)
        report.items.append(ReportItem(
            "gkdim", "pass" if entry.gk_matches(g) else "fail",
            entry.describe_gk(), str(g)))
    if "isolated" in want:
        iso = has_isolated_singularity(omega)
        report.items.append(ReportItem(
            "isolated", "pass" if iso == entry.expected_isolated else "fail",
            str(entry.expected_isolated).lower(), str(iso).lower()))
    if "vacancy" in want:
        bound = D
        if entry.expected_vacant == "no" and entry.vacancy_witness is not None:
            bound = max(bound, entry.vacancy_witness)
        dims = vacancy_check(omega, bound)
        _check_yes_no("vacancy", entry.expected_vacant, dims.items(),
                      entry.vacancy_witness, report, bound)
    if "sealed" in want:
        bound = D
        if entry.expected_sealed == "no" and entry.sealed_witness is not None:
            bound = max(bound, entry.sealed_witness)
        dims, _ = sealed_k1_dims(omega, bound)
        _check_yes_no("sealed", entry.expected_sealed, dims.items(),
                      entry.sealed_witness, report, bound)
    if "cohomology" in want and entry.type_label in ("i", "q", "bw"):
        tab = ph_dims(omega, D)
        bad = []
        for i in range(4):
            exp = closed_form_ph(entry.weights, i, n).expand(-n, D)
            got = [tab.dim(i, d) for d in range(-n, D + 1)]
            if exp != got:
                bad.append("PH%d" % i)
        report.items.append(ReportItem(
            "cohomology", "pass" if not bad else "fail",
            "closed-form tables to %d" % D,
            "match" if not bad else "mismatch in %s" % ",".join(bad)))
    return report


def verify_all(max_degree: Optional[int] = None,
               selector: Optional[str] = None,
               checks: Optional[Sequence[str]] = None,
               progress: Optional[Callable[[EntryReport], None]] = None,
               path: Optional[Path] = None) -> CatalogReport:
    reports = []
    for entry in entries(selector, path=path):
        rep = verify_entry(entry, max_degree, checks=checks)
        if progress is not None:
            progress(rep)
        reports.append(rep)
    return CatalogReport(reports)
