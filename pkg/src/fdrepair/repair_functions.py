"""Repair functions: map a bag of conflicting values to one value.

All built-ins are preservative (the chosen value is always a bag member),
hence idempotent and unable to introduce values absent from the input.
NULL participates as an ordinary candidate in the voting functions but
loses every tie against a constant; for max it is the minimum.
"""

from collections import Counter
from dataclasses import dataclass


def _break_tie(candidates, rng):
    """Pick among tied values: constants beat NULL, then a seeded choice."""
    constants = [v for v in candidates if v is not None]
    pool = constants if constants else candidates
    if len(pool) == 1:
        return pool[0]
    return rng.choice(sorted(set(pool)))


def majority_vote(values, rng):
    """A value of maximal multiplicity; ties resolved by the seeded rng."""
    if not values:
        raise ValueError("empty bag")
    counts = Counter(values)
    best = max(counts.values())
    return _break_tie([v for v, c in counts.items() if c == best], rng)


def weighted_vote(values, null_counts, schema_width, rng):
    """Value with maximal summed weight (schema_width - N)**4, where N is
    the NULL count of the source tuple of each bag entry."""
    if not values:
        raise ValueError("empty bag")
    weights = Counter()
    for v, n in zip(values, null_counts):
        weights[v] += (schema_width - n) ** 4
    best = max(weights.values())
    return _break_tie([v for v, w in weights.items() if w == best], rng)


def _numeric_or_text_key(values):
    try:
        return {v: float(v) for v in values}.__getitem__
    except (TypeError, ValueError):
        return lambda v: v


def max_value(values):
    """Maximum bag member; numeric order when every constant parses as a
    number, else lexicographic. NULL ranks below every constant."""
    if not values:
        raise ValueError("empty bag")
    constants = [v for v in values if v is not None]
    if not constants:
        return None
    return max(constants, key=_numeric_or_text_key(constants))


@dataclass
class RepairFunction:
    """A named bag-to-value function plus its preservative capability flag."""
    name: str
    preservative: bool
    _pick: callable

    def __call__(self, values, null_counts, schema_width, rng):
        value = self._pick(values, null_counts, schema_width, rng)
        if self.preservative:
            assert value in values, \
                "preservative function %s produced a value outside the bag" % self.name
        return value


MV = RepairFunction("mv", True, lambda vs, ns, w, rng: majority_vote(vs, rng))
WV = RepairFunction("wv", True, lambda vs, ns, w, rng: weighted_vote(vs, ns, w, rng))
MAX = RepairFunction("max", True, lambda vs, ns, w, rng: max_value(vs))

BUILTINS = {fn.name: fn for fn in (MV, WV, MAX)}


def get_function(name):
    try:
        return BUILTINS[name]
    except KeyError:
        raise ValueError("unknown repair function %r (choose from %s)"
                         % (name, ", ".join(sorted(BUILTINS)))) from None


def is_preservative(fn):
    return fn.preservative
