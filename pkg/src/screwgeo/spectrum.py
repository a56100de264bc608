"""Length spectrum of the screw structure, with verifiable witnesses.

Periodic geodesics of the screw structure project to circles, periodic
geodesics, or periodic helices of the base manifold, and every length this
module emits carries the full data of such a witness:

  * 'circle' entries live over circles of the simply connected model space.
    A coprime pair (m, n) closes the geodesic after n circuits while the
    frame rotation completes m turns; the lengths are
    2*pi*sqrt((m^2 - n^2)/(lam^2 - k)) with radius sin_k(r)^2 =
    (m^2 - n^2)/(n^2 (lam^2 - k)).

  * 'geodesic_fiber' entries live over a closed base geodesic of complex
    length ell + i*theta; the geodesic closes after n circuits iff
    n*(lam*ell + theta) = 2*pi*m' for coprime (n, m'), giving length n*ell
    (n = 1 when lam*ell + theta = 0).

  * 'helix_type' entries live over periodic helices of type (ell + i*theta,
    q, p) in a flat or hyperbolic quotient.  For coprime (n, m) subject to
    2*pi*m > n*q*ell*|mu - lam| the axis speed c solves

        ((2*pi*m/(q*ell*n))^2 + (lam^2 - k) - (mu - lam)^2) c^2 = lam^2 - k,

    and the length is n*q*ell/c.  Radii are cross-checked through two
    independent routes on every entry.

The enumeration is exhaustive within an explicit budget (length cutoff,
maximum frame-rotation index m_max, rational-detection tolerance); growing
the budget only ever grows the result.
"""

from __future__ import annotations

import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .geodesic import ScrewConfig, geodesic_geometric
from .helix import (TWO_PI, ComplexLength, HelixType, arcsin_k,
                    check_complex_length, cos_k, cot_k, kappa_tau_from_axis,
                    sin_k)
from .spaceform import rot

SOURCES = ("circle", "geodesic_fiber", "helix_type")

#: relative tolerance at which two routes to the same quantity must agree
#: before an entry is emitted
CONSISTENCY_RTOL = 1e-9

#: guard band on the strict helix closing inequality, relative to the size of
#: its two sides; inside the band the radius is below double-precision
#: resolution and the pair is treated as the degenerate boundary case
GATE_GUARD = 1e-9

_EPS64 = sys.float_info.epsilon


class SpectrumConsistencyError(RuntimeError):
    """Two independent formulas for the same witness quantity disagree."""


@dataclass(frozen=True)
class EnumerationBudget:
    """Explicit truncation of the spectrum enumeration.

    cutoff: largest length to report.  m_max: largest frame-rotation index m
    tried for helix-type entries.  rational_tol: absolute tolerance on
    n*x - m' when deciding whether x is the rational m'/n.  max_denominator:
    largest denominator considered by the rational detection.
    """

    cutoff: float
    m_max: int = 64
    rational_tol: float = 1e-9
    max_denominator: int = 10 ** 6

    def __post_init__(self):
        if not self.cutoff > 0.0:
            raise ValueError(f"cutoff must be positive, got {self.cutoff!r}")
        if self.m_max < 1:
            raise ValueError(f"m_max must be >= 1, got {self.m_max!r}")
        if not self.rational_tol > 0.0:
            raise ValueError("rational_tol must be positive")
        if self.max_denominator < 1:
            raise ValueError("max_denominator must be >= 1")


@dataclass(frozen=True)
class SpectrumEntry:
    """One length together with the witness data of a periodic geodesic.

    n and m are always set (m holds m' for geodesic_fiber entries); the
    remaining fields are filled where the source defines them.  big_l is the
    period of one run of the witness helix (q*ell/c), kept for re-checks but
    not serialized.
    """

    length: float
    source: str
    n: int
    m: int
    ell: float | None = None
    theta: float | None = None
    q: int | None = None
    p: int | None = None
    r: float | None = None
    c: float | None = None
    mu: float | None = None
    kappa: float | None = None
    tau: float | None = None
    big_l: float | None = None

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"unknown spectrum source {self.source!r}")


@dataclass(frozen=True)
class CLSpectrum:
    """Complex length spectrum of a base manifold: the (ell, theta) of its
    closed geodesics, with an optional manifold name."""

    entries: tuple[ComplexLength, ...]
    name: str | None = None


def _sort_key(e: SpectrumEntry):
    return (e.length, SOURCES.index(e.source),
            e.ell if e.ell is not None else -1.0,
            e.theta if e.theta is not None else -1.0,
            e.q if e.q is not None else 0,
            e.p if e.p is not None else 0,
            e.n, e.m)


def _witness_key(e: SpectrumEntry):
    return (e.source, e.n, e.m, e.q, e.p, e.ell, e.theta)


def _dedup_sorted(entries) -> list[SpectrumEntry]:
    seen = set()
    out = []
    for e in sorted(entries, key=_sort_key):
        key = _witness_key(e)
        if key not in seen:
            seen.add(key)
            out.append(e)
    return out


def _require_quotient_cfg(cfg: ScrewConfig) -> None:
    if cfg.k == 1:
        raise ValueError(
            "spectra over quotient manifolds are supported for k in {0, -1} "
            "only; the spherical case is out of scope")


def model_spectrum(cfg: ScrewConfig, budget: EnumerationBudget):
    """All circle-backed lengths of the simply connected model space up to the
    cutoff, one entry per coprime witness pair (m, n), sorted by length.

    Witness pairs satisfy m > n except when k = 1 with lam^2 < 1, where
    m < n.  For k = 1, pairs whose radius formula has no solution (a circle
    of that radius does not exist) are skipped, so that every emitted entry
    is backed by an actual circle.
    """
    denom = cfg.lam * cfg.lam - cfg.k
    if denom == 0.0:
        raise ValueError(
            "pitch with lam^2 = k closes circles of every radius; there is "
            "no discrete circle spectrum at this pitch")
    bound = (budget.cutoff / TWO_PI) ** 2 * abs(denom)  # cap on |m^2 - n^2|
    entries = []

    def consider(m: int, n: int):
        if math.gcd(m, n) != 1:
            return
        s2 = (m * m - n * n) / (n * n * denom)
        if cfg.k == 1 and s2 > 1.0:
            return  # no circle of that radius on the sphere
        r = arcsin_k(math.sqrt(s2), cfg.k)
        length = TWO_PI * math.sqrt((m * m - n * n) / denom)
        if length <= budget.cutoff:
            entries.append(SpectrumEntry(length=length, source="circle",
                                         n=n, m=m, r=r))

    if denom > 0.0:
        n = 1
        while 2 * n + 1 <= bound:
            m = n + 1
            while m * m - n * n <= bound:
                consider(m, n)
                m += 1
            n += 1
    else:
        m = 1
        while 2 * m + 1 <= bound:
            n = m + 1
            while n * n - m * m <= bound:
                consider(m, n)
                n += 1
            m += 1
    return _dedup_sorted(entries)


def geodesic_fiber_lengths(cl: ComplexLength, cfg: ScrewConfig,
                           budget: EnumerationBudget):
    """Length over the closed geodesic cl, when the screw pitch winds
    rationally around it.

    Detects whether (lam*ell + theta)/(2*pi) is a rational m'/n (within the
    budget's rational tolerance, denominators up to max_denominator) and, if
    so, emits the single primitive length n*ell.  m' may be zero or negative;
    lam*ell + theta = 0 gives n = 1 and length ell.
    """
    check_complex_length(cl)
    x = (cfg.lam * cl.ell + cl.theta) / TWO_PI
    frac = Fraction(x).limit_denominator(budget.max_denominator)
    n, mp = frac.denominator, frac.numerator
    if abs(n * x - mp) >= budget.rational_tol:
        return []
    length = n * cl.ell
    if length > budget.cutoff:
        return []
    return [SpectrumEntry(length=length, source="geodesic_fiber",
                          n=n, m=mp, ell=cl.ell, theta=cl.theta)]


def _relerr(a: float, b: float) -> float:
    scale = max(abs(a), abs(b), 1e-300)
    return abs(a - b) / scale


def _helix_entry(cl: ComplexLength, q: int, p: int, n: int, m: int,
                 cfg: ScrewConfig, budget: EnumerationBudget):
    """Entry for the (n, m)-resonance over the helix type (cl, q, p), or None
    when the closing condition or the budget excludes the pair."""
    ell, theta = cl.ell, cl.theta
    k, lam = cfg.k, cfg.lam
    lam2k = lam * lam - k
    w = TWO_PI * p - q * (theta + lam * ell)
    lhs = 4.0 * math.pi ** 2 * m * m
    rhs = n * n * w * w
    # Strictly-positive-radius gate, with a guard band: pairs within float
    # noise of the boundary are the degenerate axis case (radius 0), and a
    # radius that small is not resolvable from double-precision length data.
    if not lhs - rhs > GATE_GUARD * (lhs + rhs):
        return None
    mu = (TWO_PI * p / q - theta) / ell
    if k == 0 and mu == 0.0:
        return None  # degenerate flat helix: covered by the fiber source
    u = (TWO_PI * m / (q * ell * n)) ** 2
    c2 = lam2k / (u + lam2k - (mu - lam) ** 2)
    c = math.sqrt(c2)

    # radius, two independent routes: the closed-form fraction versus the
    # unit-speed relation evaluated at the axis speed just solved for; the
    # comparison carries an absolute term for the subtractive cancellation
    # both routes suffer near the closing boundary
    denom = n * n * lam2k * ((TWO_PI * p - q * theta) ** 2
                             - k * ell * ell * q * q)
    s2_closed = (lhs - rhs) / denom
    s2_unit = (1.0 / c2 - 1.0) / (mu * mu - k)
    cancel = ((lhs + rhs) / abs(denom)
              + (u + (mu - lam) ** 2) / abs(mu * mu - k))
    tol = 64.0 * _EPS64 * cancel + CONSISTENCY_RTOL * max(abs(s2_closed),
                                                          abs(s2_unit))
    if abs(s2_closed - s2_unit) > tol:
        raise SpectrumConsistencyError(
            f"radius routes disagree for type (ell={ell}, theta={theta}, "
            f"q={q}, p={p}), pair (n={n}, m={m}): closed form {s2_closed!r} "
            f"vs unit-speed route {s2_unit!r}")
    r = arcsin_k(math.sqrt(s2_closed), k)

    kappa, tau = kappa_tau_from_axis(c, mu, k)
    big_l = q * ell / c
    length = math.sqrt((4.0 * math.pi ** 2 * m * m
                        + n * n * (ell * ell * lam2k * q * q - w * w)) / lam2k)
    if _relerr(length, n * big_l) > CONSISTENCY_RTOL:
        raise SpectrumConsistencyError(
            f"length routes disagree for type (ell={ell}, theta={theta}, "
            f"q={q}, p={p}), pair (n={n}, m={m}): closed form {length!r} "
            f"vs n*q*ell/c = {n * big_l!r}")
    if length > budget.cutoff:
        return None
    return SpectrumEntry(length=length, source="helix_type", n=n, m=m,
                         ell=ell, theta=theta, q=q, p=p, r=r, c=c, mu=mu,
                         kappa=kappa, tau=tau, big_l=big_l)


def helix_type_lengths(ht: HelixType, cfg: ScrewConfig,
                       budget: EnumerationBudget):
    """All helix-backed lengths over one helix type within the budget,
    sorted by length.  Flat and hyperbolic quotients only."""
    _require_quotient_cfg(cfg)
    out = []
    n = 1
    while n * ht.q * ht.cl.ell < budget.cutoff:
        for m in range(1, budget.m_max + 1):
            if math.gcd(n, m) == 1:
                e = _helix_entry(ht.cl, ht.q, ht.p, n, m, cfg, budget)
                if e is not None:
                    out.append(e)
        n += 1
    return _dedup_sorted(out)


def full_spectrum(cls_: CLSpectrum, cfg: ScrewConfig,
                  budget: EnumerationBudget):
    """Union spectrum over a flat or hyperbolic manifold with the given
    complex length spectrum: circle entries of the model space, fiber entries
    over each closed geodesic, and helix-type entries over every type within
    the budget.  Exact duplicate witnesses (from repeated input rows) are
    dropped; distinct witnesses of equal length are all retained.
    """
    _require_quotient_cfg(cfg)
    entries = list(model_spectrum(cfg, budget))
    for cl in cls_.entries:
        check_complex_length(cl)
        entries += geodesic_fiber_lengths(cl, cfg, budget)
        q = 1
        while q * cl.ell < budget.cutoff:
            n = 1
            while n * q * cl.ell < budget.cutoff:
                for m in range(1, budget.m_max + 1):
                    if math.gcd(n, m) != 1:
                        continue
                    # closing gate |2*pi*p - q(theta+lam*ell)| < 2*pi*m/n
                    # bounds p to a closed integer interval
                    center = q * (cl.theta + cfg.lam * cl.ell) / TWO_PI
                    half = m / n
                    for p in range(math.floor(center - half),
                                   math.ceil(center + half) + 1):
                        if math.gcd(abs(p), q) != 1:
                            continue
                        e = _helix_entry(cl, q, p, n, m, cfg, budget)
                        if e is not None:
                            entries.append(e)
                n += 1
            q += 1
    return _dedup_sorted(entries)


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class EntryCheck:
    name: str
    value: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.value <= self.bound


@dataclass(frozen=True)
class VerificationReport:
    entry: SpectrumEntry
    checks: tuple[EntryCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c.ok]


FUNDAMENTAL_RESIDUAL_BOUND = 1e-10
ROT_CLOSURE_BOUND = 1e-9
FRAME_CLOSURE_BOUND = 1e-9
LENGTH_RECOMPUTE_RTOL = 1e-12
LENGTH_IDENTITY_RTOL = 1e-11
RADIUS_ROUTES_RTOL = 1e-9
FIBER_RESIDUAL_BOUND = TWO_PI * 1e-9


def _rot_closure_defect(lam: float, tau: float, kappa: float,
                        period: float) -> float:
    R = rot(np.array([lam - tau, 0.0, -kappa]), period)
    return float(np.max(np.abs(R - np.eye(3))))


def verify_entry(entry: SpectrumEntry, cfg: ScrewConfig) -> VerificationReport:
    """Independently re-verify the periodic geodesic behind a spectrum entry.

    Circle and helix witnesses are checked against the closing equation
    n*L*sqrt(kappa^2 + (lam - tau)^2) = 2*pi*m, the closure of the frame
    rotation factor at the claimed period, primitivity (coprimality) of the
    integer data, and recomputability of the length; helix witnesses also get
    the two-route radius cross-check, and circle witnesses a full frame
    closure in the model space.  Fiber witnesses are checked against
    n*(lam*ell + theta) = 2*pi*m'.
    """
    k, lam = cfg.k, cfg.lam
    checks: list[EntryCheck] = []

    def add(name, value, bound):
        checks.append(EntryCheck(name, float(value), float(bound)))

    if entry.source == "circle":
        add("coprime_nm", 0.0 if math.gcd(entry.n, entry.m) == 1 else 1.0, 0.0)
        L = TWO_PI * sin_k(entry.r, k)
        kappa = cot_k(entry.r, k)
        period = entry.n * L
        add("length_recompute", _relerr(entry.length, period),
            LENGTH_RECOMPUTE_RTOL)
        add("fundamental_residual",
            abs(period * math.sqrt(kappa * kappa + lam * lam)
                - TWO_PI * entry.m), FUNDAMENTAL_RESIDUAL_BOUND)
        add("rot_closure", _rot_closure_defect(lam, 0.0, kappa, period),
            ROT_CLOSURE_BOUND)
        # full loop in the model space: the frame returns exactly
        f0 = geodesic_geometric(kappa, 0.0, np.eye(3), cfg, 0.0).matrix()
        fT = geodesic_geometric(kappa, 0.0, np.eye(3), cfg, period).matrix()
        add("frame_closure", float(np.max(np.abs(fT - f0))),
            FRAME_CLOSURE_BOUND)

    elif entry.source == "geodesic_fiber":
        prim = 1.0
        if entry.m == 0:
            prim = 0.0 if entry.n == 1 else 1.0
        elif math.gcd(entry.n, abs(entry.m)) == 1:
            prim = 0.0
        add("coprime_nm", prim, 0.0)
        add("length_recompute", _relerr(entry.length, entry.n * entry.ell),
            LENGTH_RECOMPUTE_RTOL)
        add("fiber_residual",
            abs(entry.n * (lam * entry.ell + entry.theta)
                - TWO_PI * entry.m), FIBER_RESIDUAL_BOUND)

    elif entry.source == "helix_type":
        add("coprime_nm", 0.0 if math.gcd(entry.n, entry.m) == 1 else 1.0, 0.0)
        add("coprime_pq",
            0.0 if math.gcd(abs(entry.p), entry.q) == 1 else 1.0, 0.0)
        ell, theta, q, p = entry.ell, entry.theta, entry.q, entry.p
        lam2k = lam * lam - k
        mu = (TWO_PI * p / q - theta) / ell
        u = (TWO_PI * entry.m / (q * ell * entry.n)) ** 2
        c2 = lam2k / (u + lam2k - (mu - lam) ** 2)
        c = math.sqrt(c2)
        add("axis_speed_recompute", _relerr(entry.c, c), 1e-12)
        s2_unit = (1.0 / c2 - 1.0) / (mu * mu - k)
        s2_stored = sin_k(entry.r, k) ** 2
        # both radius routes lose |cancel| * eps to subtractive cancellation
        # near the closing boundary, so the bounds widen with that scale and
        # only there; for well-separated pairs they stay at the fixed values
        cancel = (u + (mu - lam) ** 2) / abs(mu * mu - k)
        scale = max(abs(s2_stored), abs(s2_unit), 1e-300)
        add("unit_speed_identity",
            abs(c2 * (cos_k(entry.r, k) ** 2
                      + mu * mu * sin_k(entry.r, k) ** 2) - 1.0),
            max(1e-12, 64.0 * _EPS64 * (1.0 + c2 * abs(mu * mu - k) * cancel)))
        add("radius_routes", _relerr(s2_stored, s2_unit),
            max(RADIUS_ROUTES_RTOL, 64.0 * _EPS64 * cancel / scale))
        kappa, tau = kappa_tau_from_axis(c, mu, k)
        big_l = q * ell / c
        period = entry.n * big_l
        add("length_identity", _relerr(entry.length, period),
            LENGTH_IDENTITY_RTOL)
        add("fundamental_residual",
            abs(period * math.sqrt(kappa * kappa + (lam - tau) ** 2)
                - TWO_PI * entry.m), FUNDAMENTAL_RESIDUAL_BOUND)
        add("rot_closure", _rot_closure_defect(lam, tau, kappa, period),
            ROT_CLOSURE_BOUND)
        if k == 0:
            add("nonzero_winding", 0.0 if mu != 0.0 else 1.0, 0.0)
    else:
        raise ValueError(f"unknown spectrum source {entry.source!r}")

    return VerificationReport(entry=entry, checks=tuple(checks))


# ---------------------------------------------------------------------------
# comparison

@dataclass(frozen=True)
class MatchReport:
    ok: bool
    detail: str
    first_mismatch: tuple | None = None


def spectrum_lengths(entries, rtol: float = 1e-9) -> list[float]:
    """Sorted length set of a spectrum: witnesses of equal length (within the
    relative tolerance) collapse to one representative."""
    lengths = sorted(float(e.length) if isinstance(e, SpectrumEntry) else float(e)
                     for e in entries)
    out = []
    for v in lengths:
        if not out or _relerr(out[-1], v) > rtol:
            out.append(v)
    return out


def compare_spectra(a, b, tol: float = 1e-9) -> MatchReport:
    """Compare the length sets of two spectra within a relative tolerance.

    a and b may be entry lists or plain length lists.  Reports the first
    mismatching length and which side it belongs to.
    """
    la = spectrum_lengths(a, tol)
    lb = spectrum_lengths(b, tol)
    i = j = 0
    while i < len(la) and j < len(lb):
        if _relerr(la[i], lb[j]) <= tol:
            i += 1
            j += 1
        elif la[i] < lb[j]:
            return MatchReport(False, f"length {la[i]:.17g} only on side A",
                               ("A", la[i]))
        else:
            return MatchReport(False, f"length {lb[j]:.17g} only on side B",
                               ("B", lb[j]))
    if i < len(la):
        return MatchReport(False, f"length {la[i]:.17g} only on side A",
                           ("A", la[i]))
    if j < len(lb):
        return MatchReport(False, f"length {lb[j]:.17g} only on side B",
                           ("B", lb[j]))
    return MatchReport(True, f"{len(la)} lengths agree")


# ---------------------------------------------------------------------------
# serialization

CSV_COLUMNS = ("length", "source", "ell", "theta", "q", "p", "n", "m",
               "r", "c", "mu", "kappa", "tau")

_FLOAT_FIELDS = {"length", "ell", "theta", "r", "c", "mu", "kappa", "tau"}
_INT_FIELDS = {"q", "p", "n", "m"}


def _fmt(name: str, value) -> str:
    if value is None:
        return ""
    if name in _INT_FIELDS:
        return str(int(value))
    if name == "source":
        return str(value)
    return format(float(value), ".17g")


def _entry_cells(e: SpectrumEntry) -> list[str]:
    return [_fmt(name, getattr(e, name)) for name in CSV_COLUMNS]


def metadata_dict(cfg: ScrewConfig, budget: EnumerationBudget) -> dict:
    return {
        "k": cfg.k,
        "lambda": cfg.lam,
        "cutoff": budget.cutoff,
        "m_max": budget.m_max,
        "rational_tol": budget.rational_tol,
        "max_denominator": budget.max_denominator,
    }


def write_spectrum_csv(f, entries, metadata: dict) -> None:
    """CSV spectrum dump: '# key=value' metadata lines, a header row, then one
    row per witness with empty cells where a field does not apply."""
    for key, value in metadata.items():
        if isinstance(value, float):
            f.write(f"# {key}={format(value, '.17g')}\n")
        else:
            f.write(f"# {key}={value}\n")
    f.write(",".join(CSV_COLUMNS) + "\n")
    for e in entries:
        f.write(",".join(_entry_cells(e)) + "\n")


def write_spectrum_json(f, entries, metadata: dict) -> None:
    """JSON spectrum dump with the same fields as the CSV schema."""
    rows = []
    for e in entries:
        row = {}
        for name in CSV_COLUMNS:
            v = getattr(e, name)
            if v is None or name == "source":
                row[name] = v
            elif name in _INT_FIELDS:
                row[name] = int(v)
            else:
                row[name] = float(v)
        rows.append(row)
    json.dump({"metadata": metadata, "entries": rows}, f, indent=2)
    f.write("\n")


def _entry_from_fields(fields: dict) -> SpectrumEntry:
    kwargs = {}
    for name in CSV_COLUMNS:
        v = fields.get(name)
        if v is None or v == "":
            kwargs[name] = None
        elif name == "source":
            kwargs[name] = v
        elif name in _INT_FIELDS:
            kwargs[name] = int(v)
        else:
            kwargs[name] = float(v)
    if kwargs["n"] is None or kwargs["m"] is None:
        raise ValueError("spectrum rows need integer witness fields n and m")
    return SpectrumEntry(**kwargs)


def _metadata_value(text: str):
    for parse in (int, float):
        try:
            return parse(text)
        except ValueError:
            pass
    return text


def read_spectrum(path):
    """Read a spectrum file written by this package (CSV or JSON, detected by
    content).  Returns (entries, metadata)."""
    with open(path, "r", encoding="utf-8") as f:
        text = f.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        payload = json.loads(text)
        entries = [_entry_from_fields(row) for row in payload.get("entries", [])]
        return entries, payload.get("metadata", {})
    metadata = {}
    lines = []
    for line in text.splitlines():
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, value = body.split("=", 1)
                metadata[key.strip()] = _metadata_value(value.strip())
        elif line.strip():
            lines.append(line)
    reader = csv.DictReader(io.StringIO("\n".join(lines)))
    entries = [_entry_from_fields(row) for row in reader]
    return entries, metadata


def load_clspectrum(path) -> CLSpectrum:
    """Read a complex length spectrum from JSON.

    Accepted shapes: a bare array of {"ell": ..., "theta": ...} objects, or
    an object {"name": ..., "entries": [...]}.  ell must be positive and
    theta must already lie in [0, 2*pi): out-of-range angles are rejected,
    not renormalized.
    """
    with open(path, "r", encoding="utf-8") as f:
        payload = json.load(f)
    name = None
    if isinstance(payload, dict):
        name = payload.get("name")
        rows = payload.get("entries")
        if not isinstance(rows, list):
            raise ValueError("complex length spectrum object needs an "
                             "'entries' array")
    elif isinstance(payload, list):
        rows = payload
    else:
        raise ValueError("complex length spectrum must be a JSON array or an "
                         "object with an 'entries' array")
    entries = []
    for i, row in enumerate(rows):
        if not isinstance(row, dict) or "ell" not in row or "theta" not in row:
            raise ValueError(f"entry {i}: expected an object with 'ell' and "
                             "'theta'")
        try:
            cl = ComplexLength(float(row["ell"]), float(row["theta"]))
        except (TypeError, ValueError) as exc:
            raise ValueError(f"entry {i}: {exc}") from None
        try:
            check_complex_length(cl)
        except ValueError as exc:
            raise ValueError(f"entry {i}: {exc}") from None
        entries.append(cl)
    return CLSpectrum(entries=tuple(entries), name=name)
