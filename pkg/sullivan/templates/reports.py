"""Fixed wording of the human-readable reports."""

__all__ = [
    'audit_extra', 'audit_missing', 'audit_summary', 'cohomology_summary', 'report_title',
    'tower_summary', 'validation_ok', 'validation_violation', 'verdict_line'
]

report_title: str = "Hilali check: {name}"

verdict_line: str = "{dim_v:d} ≤ {dim_h:d} {verdict}"

cohomology_summary: str = (
    "total dim {total:d}, chi_c {chi_c:d}, fd observed {fd_observed:d} (predicted {fd_predicted:d})\n"
    "Poincaré duality: {duality}\n"
    "ellipticity evidence: {evidence} ({note})"
)

tower_summary: str = "odd tower of {name}: {verdict}"

validation_ok: str = "{name}: valid minimal model"

validation_violation: str = "{name}: {violation}"

audit_summary: str = "audit fd={fd:d}: {missing:d} missing, {extra:d} extra"

audit_missing: str = "missing {row}"

audit_extra: str = "extra {row}"
