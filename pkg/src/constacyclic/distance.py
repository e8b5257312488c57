"""Minimum-distance and weight-enumerator engines.

Three ways to pin a distance down, reconciled by ``certify``:

* exhaustive message enumeration, vectorized in blocks: all combinations of a
  suffix of generator rows are tabled once, then each prefix codeword is
  folded in with a single equality scan, counting only messages whose first
  nonzero symbol is 1 and scaling counts by q-1;
* bounded-weight support search: every vector of weight <= w_max is tested by
  syndrome, so an empty scan is a proof that d > w_max;
* progression lower bounds (closed forms and bch_search) from families.

A full weight distribution of either the code or its dual settles the
distance exactly (the dual via the Krawtchouk transform); an explicit
witness codeword is still required before a result is labeled exact.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import BadParams, BudgetExceeded
from .families import bch_search

DEFAULT_OP_BUDGET = 200_000_000_000  # q^k * n elementary operations
_BLOCK_BYTES = 64 << 20
_PROBE_BUDGET = 200_000_000
_PREFIX_PROBE_BUDGET = 2_000_000_000
_WITNESS_BUDGET = 20_000_000_000


@dataclass(frozen=True)
class WeightEnumerator:
    """counts[w] = number of codewords of Hamming weight w (zeros omitted,
    except counts[0] = 1)."""

    n: int
    q: int
    k: int
    counts: dict

    def min_distance(self):
        pos = [w for w, c in self.counts.items() if w > 0 and c > 0]
        if not pos:
            raise BadParams("zero code has no minimum distance")
        return min(pos)

    def total(self):
        return sum(self.counts.values())

    def to_json(self):
        return {"counts": {str(w): int(c)
                           for w, c in sorted(self.counts.items()) if c}}

    def polynomial_string(self, var="z"):
        terms = []
        for w, c in sorted(self.counts.items()):
            if not c:
                continue
            if w == 0:
                terms.append(str(c))
            else:
                coeff = "" if c == 1 else str(c)
                terms.append(f"{coeff}{var}^{w}" if w > 1 else f"{coeff}{var}")
        return " + ".join(terms) if terms else "0"


@dataclass(frozen=True)
class DistanceResult:
    """Reconciled bounds: lower from progressions and exhausted searches,
    upper from explicit codewords; exact when they meet with a witness."""

    lower: int
    upper: int
    exact: bool
    witness_codeword: tuple
    method_trace: tuple

    def to_json(self):
        return {
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "witness_codeword": (list(self.witness_codeword)
                                 if self.witness_codeword is not None else None),
            "method_trace": [{"method": m, "ops": o, "note": s}
                             for (m, o, s) in self.method_trace],
        }


def _suffix_block(G, tables, rows):
    """All q^len(rows) combinations of the given generator rows.

    Row index encodes the message digits: digit for rows[t] is
    (index // q^t) % q.
    """
    q = tables.q
    n = G.shape[1]
    block = np.zeros((1, n), dtype=np.uint8)
    for r in rows:
        parts = [block]
        for s in range(1, q):
            srow = tables.mul[s, G[r]]
            parts.append(tables.add[block, srow[None, :]])
        block = np.vstack(parts)
    return block


def _combine(G, tables, msg):
    """Codeword of a message via the subfield tables (uint8 vector)."""
    n = G.shape[1]
    out = np.zeros(n, dtype=np.uint8)
    for j, d in enumerate(msg):
        if d:
            out = tables.add[out, tables.mul[d, G[j]]]
    return out


def _lead_one_prefixes(k, q):
    """Messages over GF(q)^k whose first nonzero digit is 1, in lex order."""
    for lead in range(k):
        head = (0,) * lead + (1,)
        for rest in itertools.product(range(q), repeat=k - lead - 1):
            yield head + rest


def _weight_distribution(G, tables, *, op_budget, stop_at=None):
    """Block-enumerate the row space of G.

    Returns (counts, best_weight, best_message, completed, ops_done); counts
    is None when an early stop was requested and taken.
    """
    k, n = G.shape
    q = int(tables.q)
    nominal = (q ** k) * n
    if nominal > op_budget:
        raise BudgetExceeded(
            f"enumeration needs q^k*n = {nominal} ops > budget {op_budget}")
    rows_cap = max(_BLOCK_BYTES // max(n, 1), 1)
    j = 0
    while j < k and q ** (j + 1) <= rows_cap:
        j += 1
    suffix_rows = list(range(k - j, k))
    block = _suffix_block(G, tables, suffix_rows)
    wt = np.count_nonzero(block, axis=1)
    hist_suffix = np.bincount(wt, minlength=n + 1).astype(object)
    ops_done = block.shape[0] * n

    best_w = n + 1
    best_msg = None
    nz = wt[1:]
    if nz.size:
        i = int(np.argmin(nz)) + 1
        best_w = int(wt[i])
        digits = []
        x = i
        for _ in range(j):
            digits.append(x % q)
            x //= q
        best_msg = (0,) * (k - j) + tuple(digits)

    e0 = np.zeros(n + 1, dtype=object)
    e0[0] = 1
    if k == j:
        counts = hist_suffix
        completed = True
    else:
        acc = (hist_suffix - e0) // (q - 1)
        completed = True
        stopped = False
        if stop_at is not None and best_w <= stop_at:
            stopped = True
        if not stopped:
            for prefix in _lead_one_prefixes(k - j, q):
                pref = _combine(G, tables, prefix)
                t = tables.neg[pref]
                matches = np.count_nonzero(block == t[None, :], axis=1)
                zhist = np.bincount(matches, minlength=n + 1)
                acc += zhist[::-1].astype(object)
                ops_done += block.shape[0] * n
                mmax = int(matches.max())
                if n - mmax < best_w:
                    best_w = n - mmax
                    i = int(np.argmax(matches))
                    digits = []
                    x = i
                    for _ in range(j):
                        digits.append(x % q)
                        x //= q
                    best_msg = tuple(prefix) + tuple(digits)
                    if stop_at is not None and best_w <= stop_at:
                        stopped = True
                        break
        if stopped:
            counts = None
            completed = False
        else:
            counts = e0 + (q - 1) * acc
    if completed:
        assert counts.sum() == q ** k
        counts = {w: int(c) for w, c in enumerate(counts) if c}
    return counts, best_w, best_msg, completed, ops_done


def exhaustive_enumerator(code, op_budget=DEFAULT_OP_BUDGET):
    """Full weight distribution by message-space enumeration."""
    if code.k == 0:
        return WeightEnumerator(n=code.n, q=code.tower.q, k=0, counts={0: 1})
    tables = code.tower.subfield_tables()
    counts, _, _, _, _ = _weight_distribution(code.generator_matrix(), tables,
                                              op_budget=op_budget)
    return WeightEnumerator(n=code.n, q=code.tower.q, k=code.k, counts=counts)


def _scalar_patterns(q, w, tables):
    """All (s_1..s_w) with s_1 = 1, s_j nonzero, as a (P, w) uint8 array."""
    pats = list(itertools.product(range(1, q), repeat=w - 1))
    arr = np.ones((len(pats), w), dtype=np.uint8)
    if w > 1:
        arr[:, 1:] = np.array(pats, dtype=np.uint8)
    return arr


def _low_weight_cost(n, w, q, rows):
    return math.comb(n, w) * (q - 1) ** (w - 1) * w * max(rows, 1)


def _syndrome_hit(Hc, patterns, tables):
    """First (pattern, support) pair in the chunk with zero syndrome.

    Hc has shape (rows, chunk, w); patterns (P, w).  Returns (pi, ci) indices
    or None.  Prime fields go through one integer tensordot; extension fields
    check digit planes pattern by pattern.
    """
    rows, chunk, w = Hc.shape
    if tables.s == 1:
        pat_cap = max(1, 8_000_000 // max(rows * chunk, 1))
        for base in range(0, len(patterns), pat_cap):
            sub = patterns[base:base + pat_cap].astype(np.int32)
            syn = np.tensordot(sub, Hc.astype(np.int32), axes=([1], [2]))
            syn %= tables.p  # (P, rows, chunk)
            ok = ~syn.any(axis=1)
            if ok.any():
                pi, ci = np.argwhere(ok)[0]
                return int(pi) + base, int(ci)
        return None
    for pi, pat in enumerate(patterns):
        prod = tables.mul[pat[None, None, :], Hc]  # (rows, chunk, w)
        ok = np.ones(chunk, dtype=bool)
        for t in range(tables.s):
            syn = tables.dig[t][prod].astype(np.int32).sum(axis=2) % tables.p
            ok &= ~syn.any(axis=0)
        if ok.any():
            return pi, int(np.flatnonzero(ok)[0])
    return None


def low_weight_search(code, w_max, w_min=1, op_budget=DEFAULT_OP_BUDGET,
                      chunk=4096):
    """Test every vector of weight in [w_min, w_max] for membership.

    Returns (w, witness) at the first (hence minimum) weight with a hit, or
    (None, None) after an exhaustive empty scan, which proves d > w_max.
    """
    n, q = code.n, code.tower.q
    H = code.parity_check_matrix()
    rows = H.shape[0]
    if rows == 0:
        w = max(w_min, 1)
        return w, (1,) * w + (0,) * (n - w)
    total = sum(_low_weight_cost(n, w, q, rows)
                for w in range(max(w_min, 1), w_max + 1))
    if total > op_budget:
        raise BudgetExceeded(
            f"low-weight scan needs ~{total} ops > budget {op_budget}")
    tables = code.tower.subfield_tables()
    for w in range(max(w_min, 1), w_max + 1):
        patterns = _scalar_patterns(q, w, tables)
        combos = itertools.combinations(range(n), w)
        while True:
            batch = np.array(list(itertools.islice(combos, chunk)),
                             dtype=np.int64)
            if batch.size == 0:
                break
            hit = _syndrome_hit(H[:, batch], patterns, tables)
            if hit is not None:
                pi, ci = hit
                word = [0] * n
                for pos, val in zip(batch[ci], patterns[pi]):
                    word[int(pos)] = int(val)
                word = tuple(word)
                assert code.contains(word)
                return w, word
    return None, None


def sparse_message_probe(code, max_message_weight=3, op_budget=_PROBE_BUDGET,
                         chunk=2048):
    """Cheap upper-bound probe: encode all messages of small weight.

    Returns (best weight, witness codeword) over the scanned messages, or
    (None, None) if even weight-1 messages exceed the budget.
    """
    k, n, q = code.k, code.n, code.tower.q
    if k == 0:
        return None, None
    G = code.generator_matrix()
    tables = code.tower.subfield_tables()
    best_w, best_word = None, None
    spent = 0
    for w in range(1, min(max_message_weight, k) + 1):
        cost = math.comb(k, w) * (q - 1) ** (w - 1) * n * w
        if spent + cost > op_budget:
            break
        spent += cost
        patterns = _scalar_patterns(q, w, tables)
        combos = itertools.combinations(range(k), w)
        while True:
            batch = np.array(list(itertools.islice(combos, chunk)),
                             dtype=np.int64)
            if batch.size == 0:
                break
            Gc = G[batch]  # (C, w, n)
            for pat in patterns:
                prod = tables.mul[pat[None, :, None], Gc]  # (C, w, n)
                words = prod[:, 0, :]
                for j in range(1, w):
                    words = tables.add[words, prod[:, j, :]]
                wts = np.count_nonzero(words, axis=1)
                i = int(np.argmin(wts))
                if best_w is None or int(wts[i]) < best_w:
                    best_w = int(wts[i])
                    best_word = tuple(int(x) for x in words[i])
    return best_w, best_word


def prefix_subcode_probe(code, op_budget=_PROBE_BUDGET):
    """Upper-bound probe: enumerate the span of the first t generator rows.

    t is the largest row count affordable within the budget.  Low-degree
    message polynomials often reach minimum-weight words in these codes, and
    the scan is deterministic.  Returns (weight, witness) or (None, None).
    """
    k, n, q = code.k, code.n, code.tower.q
    if k == 0:
        return None, None
    t = 1
    while t < k and q ** (t + 1) * n <= op_budget:
        t += 1
    if q ** t * n > op_budget:
        return None, None
    tables = code.tower.subfield_tables()
    _, best_w, best_msg, _, _ = _weight_distribution(
        code.generator_matrix()[:t], tables, op_budget=op_budget)
    if best_msg is None:
        return None, None
    msg = tuple(best_msg) + (0,) * (k - t)
    return best_w, code.encode(msg)


def _krawtchouk(j, i, n, q):
    total = 0
    for s in range(j + 1):
        if s > i or j - s > n - i:
            continue
        total += (-1) ** s * (q - 1) ** (j - s) * math.comb(i, s) \
            * math.comb(n - i, j - s)
    return total


def macwilliams_transform(counts, n, q):
    """Weight distribution of the dual from that of the code (exact ints)."""
    size = sum(counts.values())
    out = {}
    for j in range(n + 1):
        tot = 0
        for i, Ai in counts.items():
            if Ai:
                tot += Ai * _krawtchouk(j, i, n, q)
        val, rem = divmod(tot, size)
        if rem or val < 0:
            raise ArithmeticError("transform produced a non-count; "
                                  "input distribution is inconsistent")
        if val:
            out[j] = val
    return out


def _message_to_codeword(code, msg):
    return code.encode(tuple(int(d) for d in msg))


def certify(code, hints=None, op_budget=DEFAULT_OP_BUDGET):
    """Reconcile lower bounds with explicit codewords into a certificate.

    Order: closed-form hints, progression search, a sparse upper-bound probe,
    then the cheaper of direct enumeration and dual enumeration plus
    transform, then a ramping support scan.  Never raises on exhaustion; the
    result simply stays non-exact.
    """
    n, k, q = code.n, code.k, code.tower.q
    if k == 0:
        raise BadParams("zero code has no minimum distance")
    trace = []
    lower, upper, witness = 1, n, None
    wmod = getattr(hints, "weight_modulus", None) if hints is not None else None

    def lift(bound):
        # all weights divisible by wmod: round the bound up to a multiple
        if wmod and bound % wmod:
            return bound + (-bound) % wmod
        return bound

    if k == n:
        e = (1,) + (0,) * (n - 1)
        return DistanceResult(lower=1, upper=1, exact=True, witness_codeword=e,
                              method_trace=(("full-space", 0, "d = 1"),))

    if hints is not None and hints.distance_lb:
        lower = max(lower, hints.distance_lb)
        trace.append(("closed-form", 0, f"lower >= {hints.distance_lb}"))

    wit = bch_search(code.defining_set)
    lower = lift(max(lower, wit.delta))
    trace.append(("bch-search", 0,
                  f"delta = {wit.delta} (b = {wit.b}, a = {wit.a})"))

    remaining = op_budget

    probe_budget = min(remaining, _PROBE_BUDGET)
    if probe_budget > 0 and q ** k * n > probe_budget:
        # only worth probing when full enumeration is not trivially cheap
        w_found, word = sparse_message_probe(code, op_budget=probe_budget)
        if w_found is not None and w_found < upper:
            upper, witness = w_found, word
        trace.append(("sparse-probe", probe_budget,
                      f"upper <= {upper}" if w_found else "no improvement"))
        if upper == lower:
            return DistanceResult(lower=lower, upper=upper, exact=True,
                                  witness_codeword=witness,
                                  method_trace=tuple(trace))

    # with a weight modulus, the few candidate minima below the witnessed
    # upper bound can be cheaper to rule out one by one than to enumerate
    if wmod and witness is not None and upper % wmod == 0:
        cands = [w for w in range(lower, upper) if w % wmod == 0]
        cost = sum(_low_weight_cost(n, w, q, n - k) for w in cands)
        if cands and cost <= min(remaining, _WITNESS_BUDGET) \
                and cost < q ** min(k, n - k) * n:
            for w in cands:
                wcost = _low_weight_cost(n, w, q, n - k)
                got, word = low_weight_search(code, w_max=w, w_min=w,
                                              op_budget=remaining)
                remaining -= wcost
                if got is not None:
                    trace.append(("support-scan", wcost,
                                  f"witness of weight {got}"))
                    return DistanceResult(lower=got, upper=got, exact=True,
                                          witness_codeword=word,
                                          method_trace=tuple(trace))
                trace.append(("support-scan", wcost,
                              f"no codeword of weight {w}"))
                lower = lift(w + 1)
            return DistanceResult(lower=upper, upper=upper, exact=True,
                                  witness_codeword=witness,
                                  method_trace=tuple(trace))

    cost_direct = q ** k * n
    cost_dual = q ** (n - k) * n
    tables = code.tower.subfield_tables()
    if min(cost_direct, cost_dual) <= remaining:
        if cost_direct <= cost_dual:
            counts, best_w, best_msg, completed, ops = _weight_distribution(
                code.generator_matrix(), tables, op_budget=remaining,
                stop_at=lower)
            remaining -= ops
            if best_w < lower:
                raise ArithmeticError(
                    f"found weight {best_w} below certified bound {lower}")
            witness = _message_to_codeword(code, best_msg)
            upper = best_w
            if not completed:
                trace.append(("enumeration", ops,
                              f"stopped early at weight {best_w}"))
            else:
                trace.append(("enumeration", ops, f"exact d = {best_w}"))
            lower = best_w
            return DistanceResult(lower=lower, upper=upper, exact=True,
                                  witness_codeword=witness,
                                  method_trace=tuple(trace))
        counts, _, _, _, ops = _weight_distribution(
            code.parity_check_matrix(), tables, op_budget=remaining)
        remaining -= ops
        d = min(w for w, c in macwilliams_transform(counts, n, q).items()
                if w > 0 and c > 0)
        lower = max(lower, d)
        trace.append(("dual-enumeration", ops,
                      f"distribution certifies d = {d}"))
        if witness is not None and len([x for x in witness if x]) == d:
            upper = d
        else:
            wcost = _low_weight_cost(n, d, q, n - k)
            if wcost <= min(remaining, _WITNESS_BUDGET):
                try:
                    w_found, word = low_weight_search(
                        code, w_max=d, w_min=d, op_budget=remaining)
                except BudgetExceeded:
                    w_found, word = None, None
                remaining -= wcost
                if w_found is not None:
                    upper, witness = w_found, word
                    trace.append(("support-scan", wcost,
                                  f"witness of weight {w_found}"))
        exact = lower == upper and witness is not None
        return DistanceResult(lower=lower, upper=upper, exact=exact,
                              witness_codeword=witness,
                              method_trace=tuple(trace))

    # no full enumeration affordable: refine the upper bound with a prefix
    # scan, then ramp the support scan from the bound up
    pb = min(remaining, _PREFIX_PROBE_BUDGET)
    w_found, word = prefix_subcode_probe(code, op_budget=pb)
    if w_found is not None and w_found < upper:
        upper, witness = w_found, word
        trace.append(("prefix-probe", pb, f"upper <= {w_found}"))
        if upper == lower:
            return DistanceResult(lower=lower, upper=upper, exact=True,
                                  witness_codeword=witness,
                                  method_trace=tuple(trace))

    w = lower
    while w <= n:
        if wmod and w % wmod:
            w = lift(w)          # no codewords at non-multiple weights
            lower = min(w, upper)
            continue
        wcost = _low_weight_cost(n, w, q, n - k)
        if wcost > remaining:
            break
        w_found, word = low_weight_search(code, w_max=w, w_min=w,
                                          op_budget=remaining)
        remaining -= wcost
        if w_found is not None:
            upper, witness = w_found, word
            trace.append(("support-scan", wcost, f"witness of weight {w}"))
            lower = w
            break
        trace.append(("support-scan", wcost, f"no codeword of weight {w}"))
        lower = lift(w + 1)
        w = lower

    exact = lower == upper and witness is not None
    return DistanceResult(lower=lower, upper=upper, exact=exact,
                          witness_codeword=witness, method_trace=tuple(trace))


def certify_pair(code, hints=None, dual_hints=None,
                 op_budget=DEFAULT_OP_BUDGET):
    """Certify a code and its dual with one enumeration of the cheaper side.

    Falls back to independent bound-only certificates when even the cheaper
    side exceeds the budget.
    """
    n, k, q = code.n, code.k, code.tower.q
    dual = code.dual()
    cheap_cost = q ** min(k, n - k) * n
    if k in (0, n) or cheap_cost > op_budget:
        return certify(code, hints, op_budget), certify(dual, dual_hints,
                                                        op_budget)
    tables = code.tower.subfield_tables()
    if k <= n - k:
        small, big = code, dual
    else:
        small, big = dual, code
    counts, best_w, best_msg, _, ops = _weight_distribution(
        small.generator_matrix(), tables, op_budget=op_budget)
    d_small = min(w for w, c in counts.items() if w > 0 and c > 0)
    small_res = DistanceResult(
        lower=d_small, upper=d_small, exact=True,
        witness_codeword=_message_to_codeword(small, best_msg),
        method_trace=(("enumeration", ops, f"exact d = {d_small}"),))

    d_big = min(w for w, c in macwilliams_transform(counts, n, q).items()
                if w > 0 and c > 0)
    trace = [("dual-enumeration", ops, f"distribution certifies d = {d_big}")]
    lower = d_big
    upper, witness = n, None
    w_found, word = sparse_message_probe(big, op_budget=_PROBE_BUDGET)
    if w_found is not None:
        upper, witness = w_found, word
        trace.append(("sparse-probe", _PROBE_BUDGET, f"upper <= {w_found}"))
    if upper > d_big:
        w_found, word = prefix_subcode_probe(big, op_budget=_PREFIX_PROBE_BUDGET)
        if w_found is not None and w_found < upper:
            upper, witness = w_found, word
            trace.append(("prefix-probe", _PREFIX_PROBE_BUDGET,
                          f"upper <= {w_found}"))
    if upper > d_big:
        wcost = _low_weight_cost(n, d_big, q, n - big.k)
        if wcost <= _WITNESS_BUDGET:
            w_found, word = low_weight_search(big, w_max=d_big, w_min=d_big,
                                              op_budget=_WITNESS_BUDGET)
            if w_found is not None:
                upper, witness = w_found, word
                trace.append(("support-scan", wcost,
                              f"witness of weight {w_found}"))
    exact = lower == upper and witness is not None
    big_res = DistanceResult(lower=lower, upper=upper, exact=exact,
                             witness_codeword=witness,
                             method_trace=tuple(trace))
    if small is code:
        return small_res, big_res
    return big_res, small_res
