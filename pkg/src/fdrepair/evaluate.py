"""Repair quality against a gold standard.

Counts are restricted to tuples present in the gold sample; cells compare
by exact value equality, and NULL-vs-constant differences count as
differences.
"""

from dataclasses import dataclass


@dataclass
class QualityReport:
    repaired_cells: int
    correctly_repaired_cells: int
    erroneous_cells: int
    precision: float
    recall: float
    f_score: float

    def as_dict(self):
        return dict(self.__dict__)


def evaluate(dirty, repaired, gold):
    """Precision/recall/F of ``repaired`` w.r.t. ``gold``, relative to ``dirty``.

    A repaired cell differs between repaired and dirty; it is correct when
    it also equals the gold value; an erroneous cell differs between gold
    and dirty.
    """
    if repaired.schema != dirty.schema or gold.schema != dirty.schema:
        raise ValueError("schema mismatch between dirty, repaired and gold")
    missing = set(gold.tids) - set(dirty.tids)
    if missing:
        raise KeyError("gold tids %r absent from dirty relation" % (sorted(missing),))
    if set(repaired.tids) != set(dirty.tids):
        raise KeyError("repaired relation is not tid-aligned with dirty")

    n_repaired = n_correct = n_error = 0
    for tid in gold.tids:
        d_row, r_row, g_row = dirty.row_of(tid), repaired.row_of(tid), gold.row_of(tid)
        for d, r, g in zip(d_row, r_row, g_row):
            if g != d:
                n_error += 1
            if r != d:
                n_repaired += 1
                if r == g:
                    n_correct += 1

    precision = n_correct / n_repaired if n_repaired else 0.0
    recall = n_correct / n_error if n_error else 0.0
    f_score = 2 * precision * recall / (precision + recall) \
        if precision + recall else 0.0
    return QualityReport(n_repaired, n_correct, n_error,
                         precision, recall, f_score)
