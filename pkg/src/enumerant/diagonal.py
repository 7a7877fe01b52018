"""Finite-stage diagonalization against an enumeration of bit strings.

At stage N the diagonal takes the i-th bit of the i-th entry (entries
shorter than i are padded with 0s) and flips it.  The result differs
from each of the first N entries at a witnessed position, which is the
whole refutation: no finite prefix of the enumeration contains it.  A
certificate records every witness so anyone can re-check the claim from
the enumeration alone; the verifier below deliberately shares no logic
with the construction.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, NamedTuple, Optional, Union

from .errors import EnumerationExhausted

__all__ = [
    "EnumerationSource",
    "MismatchRecord",
    "DiagonalCertificate",
    "diagonal_prefix",
    "certify_absence",
    "verify_certificate",
    "certificate_to_text",
    "certificate_from_text",
]

# a re-iterable collection, or a zero-argument callable yielding a fresh
# iterator per call (generators are one-shot; wrap them in a callable)
EnumerationSource = Union[Iterable[str], Callable[[], Iterable[str]]]


def _fresh(source: EnumerationSource) -> Iterator[str]:
    return iter(source() if callable(source) else source)


class MismatchRecord(NamedTuple):
    index: int  # which entry
    position: int  # which bit (1-based); equals index on the diagonal
    entry_bit: int  # that entry's bit there, 0-padded past its end
    diagonal_bit: int  # the flipped bit the diagonal uses


class DiagonalCertificate:
    """Stage-N absence certificate.

    Equality, hashing and the text form cover the core fields (stage,
    padding rule, records, and the diagonal they spell); the convenience
    flags `ends_in_one` and `occurs_in_prefix` are derived, may be None
    on parsed certificates, and are recomputed during verification.
    """

    def __init__(self, stage: int, records: tuple[MismatchRecord, ...],
                 padding: str = "zero",
                 ends_in_one: Optional[bool] = None,
                 occurs_in_prefix: Optional[bool] = None):
        self.stage = stage
        self.records = records
        self.padding = padding
        self.diagonal = "".join(str(r.diagonal_bit) for r in records)
        self.ends_in_one = ends_in_one
        self.occurs_in_prefix = occurs_in_prefix

    def _core(self):
        return (self.stage, self.padding, self.records)

    def __eq__(self, other):
        if not isinstance(other, DiagonalCertificate):
            return NotImplemented
        return self._core() == other._core()

    def __hash__(self):
        return hash(self._core())

    def __repr__(self):
        return (f"DiagonalCertificate(stage={self.stage}, "
                f"diagonal={self.diagonal!r}, padding={self.padding!r})")


def _entry_bit(entry: str, position: int) -> int:
    # zero padding: positions past the end of the entry read as 0
    return int(entry[position - 1]) if position <= len(entry) else 0


def diagonal_prefix(source: EnumerationSource, stage: int) -> str:
    """The stage-N diagonal string (flipped diagonal bits)."""
    if stage < 1:
        raise ValueError("stage must be at least 1")
    out = []
    feed = _fresh(source)
    for i in range(1, stage + 1):
        try:
            entry = next(feed)
        except StopIteration:
            raise EnumerationExhausted(needed=stage, available=i - 1) from None
        out.append("1" if _entry_bit(entry, i) == 0 else "0")
    return "".join(out)


def certify_absence(source: EnumerationSource, stage: int) -> DiagonalCertificate:
    """Build the stage-N diagonal plus one mismatch witness per entry."""
    if stage < 1:
        raise ValueError("stage must be at least 1")
    records = []
    feed = _fresh(source)
    for i in range(1, stage + 1):
        try:
            entry = next(feed)
        except StopIteration:
            raise EnumerationExhausted(needed=stage, available=i - 1) from None
        bit = _entry_bit(entry, i)
        records.append(MismatchRecord(i, i, bit, 1 - bit))
    cert = DiagonalCertificate(stage, tuple(records))
    cert.ends_in_one = cert.diagonal.endswith("1")
    scan = _fresh(source)
    cert.occurs_in_prefix = any(
        next(scan, None) == cert.diagonal for _ in range(stage))
    return cert


def verify_certificate(cert: DiagonalCertificate,
                       source: EnumerationSource) -> bool:
    """Re-check a certificate against the enumeration from scratch.

    Walks the first N entries itself, confirms every record (position,
    recorded entry bit under zero padding, flipped diagonal bit, spelled
    diagonal), and rescans the prefix for the diagonal.  Returns False
    on any discrepancy, including an enumeration that runs dry.
    Intentionally re-derives everything instead of calling the builder.
    """
    if cert.padding != "zero":
        return False
    n = cert.stage
    if n < 1 or len(cert.records) != n or len(cert.diagonal) != n:
        return False
    feed = _fresh(source)
    seen = []
    for i in range(1, n + 1):
        try:
            entry = next(feed)
        except StopIteration:
            return False
        seen.append(entry)
        rec = cert.records[i - 1]
        if rec.index != i or rec.position != i:
            return False
        actual = int(entry[i - 1]) if i <= len(entry) else 0
        if rec.entry_bit != actual:
            return False
        if rec.diagonal_bit != 1 - actual:
            return False
        if cert.diagonal[i - 1] != str(rec.diagonal_bit):
            return False
    if cert.diagonal in seen:
        return False
    if cert.occurs_in_prefix not in (None, cert.diagonal in seen):
        return False
    if cert.ends_in_one not in (None, cert.diagonal.endswith("1")):
        return False
    return True


def certificate_to_text(cert: DiagonalCertificate) -> str:
    """Line format: `N=<stage> pad=<rule>` then one record per line."""
    lines = [f"N={cert.stage} pad={cert.padding}"]
    lines.extend(
        f"{r.index} {r.position} {r.entry_bit} {r.diagonal_bit}"
        for r in cert.records)
    return "\n".join(lines) + "\n"


def certificate_from_text(text: str) -> DiagonalCertificate:
    """Parse the text form; derived flags stay unset until verification."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty certificate")
    head = lines[0].split()
    if len(head) != 2 or not head[0].startswith("N=") or not head[1].startswith("pad="):
        raise ValueError(f"malformed header: {lines[0]!r}")
    stage = int(head[0][2:])
    padding = head[1][4:]
    records = []
    for ln in lines[1:]:
        fields = ln.split()
        if len(fields) != 4:
            raise ValueError(f"malformed record: {ln!r}")
        idx, pos, ebit, dbit = map(int, fields)
        records.append(MismatchRecord(idx, pos, ebit, dbit))
    if len(records) != stage:
        raise ValueError(f"expected {stage} records, found {len(records)}")
    return DiagonalCertificate(stage, tuple(records), padding=padding)
