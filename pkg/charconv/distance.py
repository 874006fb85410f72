#-------------------------------------------------------------------------
# The Character Code Convolutional Toolkit
#
# Copyright (c) The charconv authors. All rights reserved.
#
# The MIT License (MIT)
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the ""Software""), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED *AS IS*, WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
#
#--------------------------------------------------------------------------
"""
Distance oracles.

Exact minimum distances of block codes (codeword enumeration, minimal
dependent column sets, MacWilliams transforms), a bounded free-distance
search for polynomial generator matrices, and the certification of the
designed free-distance bounds carried by construction records.
"""

import collections
import dataclasses
import heapq
import itertools
import logging
from typing import Any, List, Optional, Tuple

import numpy as np

from . import charcode
from . import matfq
from . import utils
from .config import DEFAULT
from .polymat import encode, weight
from .exceptions import BudgetExceededException, ParameterException

LOG = logging.getLogger('charconv')

ENUMERATION = "enumeration"
DEPENDENT_COLUMNS = "dependent-columns"
TRELLIS_SEARCH = "trellis-search"

CERTIFIED = "certified"
CONTRADICTED = "contradicted"
UNCERTIFIED = "uncertified"

# Messages encoded per numpy batch during enumeration.
CHUNK = 8192


@dataclasses.dataclass
class DistanceResult:
    """Outcome of a distance oracle.

    ``exact`` is set only when the oracle exhausted its search space.
    When it is not, ``value`` is a lower bound for the dependent-column
    search and an upper witness for the free-distance search.
    """
    value: Optional[int]
    exact: bool
    method: str
    search_caps: Optional[Tuple[Optional[int], Optional[int]]] = None
    witness: Any = None
    status: str = "exact"
    detail: str = ""

    def to_dict(self):
        return collections.OrderedDict([
            ('value', self.value),
            ('exact', self.exact),
            ('method', self.method),
            ('search_caps', list(self.search_caps)
             if self.search_caps is not None else None),
            ('witness', self.witness),
            ('status', self.status),
            ('detail', self.detail),
        ])


@dataclasses.dataclass
class Certificate:
    """Status of a record's designed distance bound."""
    bound_kind: str
    status: str
    designed: int
    value: Optional[int] = None
    routes: List[DistanceResult] = dataclasses.field(default_factory=list)
    downscale: List[dict] = dataclasses.field(default_factory=list)
    chain: Optional[dict] = None
    detail: str = ""

    @property
    def passed(self):
        return self.status == CERTIFIED

    def to_dict(self):
        return collections.OrderedDict([
            ('bound_kind', self.bound_kind),
            ('status', self.status),
            ('designed', self.designed),
            ('value', self.value),
            ('routes', [route.to_dict() for route in self.routes]),
            ('downscale', self.downscale),
            ('chain', self.chain),
            ('detail', self.detail),
        ])


def _budgets(budgets):
    return budgets if budgets is not None else DEFAULT


def _messages(spec, start, stop, k):
    """Message vectors with indices in ``[start, stop)``, digit ``i`` of
    the index (base q) being coordinate ``i``."""
    index = np.arange(start, stop, dtype=np.int64)
    powers = spec.q ** np.arange(k, dtype=np.int64)
    return (index[:, None] // powers) % spec.q


def codeword_weights(generator, budget=None):
    """Yield ``(first_index, weights)`` for every batch of messages.

    :Raises:
        - :exc:`.BudgetExceededException` if ``q^k`` exceeds the
          ``codewords`` budget.
    """
    spec = generator.spec
    cap = budget if budget is not None else DEFAULT.codewords
    total = spec.q ** generator.rows
    if total > cap:
        raise BudgetExceededException("codewords", total, cap)
    for start in range(0, total, CHUNK):
        stop = min(start + CHUNK, total)
        words = matfq.matmul(spec, _messages(spec, start, stop,
                                             generator.rows),
                             generator.entries)
        yield start, np.count_nonzero(words, axis=1)


def weight_distribution(generator, budget=None):
    """``[A_0, ..., A_n]`` by exhaustive enumeration.

    :Args:
        - generator (:class:`.MatrixFq`): A generator matrix with
          independent rows.

    :Returns:
        - List of python ints.
    """
    counts = np.zeros(generator.cols + 1, dtype=np.int64)
    for _, weights in codeword_weights(generator, budget):
        counts += np.bincount(weights, minlength=generator.cols + 1)
    return [int(c) for c in counts]


def min_distance_enumeration(generator, budget=None):
    """Exact minimum distance by enumerating all ``q^k`` codewords.

    :Args:
        - generator (:class:`.MatrixFq`)

    :Kwargs:
        - budget (int): Codeword cap, default the ``codewords`` budget.

    :Returns:
        - An exact :class:`.DistanceResult` whose witness is a minimum
          weight message.

    :Raises:
        - :exc:`.ParameterException` for the zero code.
        - :exc:`.BudgetExceededException` above the cap.
    """
    if generator.rows == 0 or matfq.rank(generator) == 0:
        raise ParameterException("The zero code has no minimum distance")
    best, witness = None, None
    for start, weights in codeword_weights(generator, budget):
        weights = np.where(weights == 0, generator.cols + 1, weights)
        pos = int(np.argmin(weights))
        if best is None or int(weights[pos]) < best:
            best = int(weights[pos])
            witness = start + pos
    message = list(utils.digits(witness, generator.spec.q, generator.rows))
    LOG.debug("Enumeration distance {0} over {1} codewords".format(
        best, generator.spec.q ** generator.rows))
    return DistanceResult(best, True, ENUMERATION,
                          witness={'message': message})


def min_dependent_columns(matrix, w_cap, budget=None):
    """Smallest set of linearly dependent columns, up to ``w_cap``.

    Sizes are tried in increasing order. For size ``w`` every
    ``(w-1)``-subset ``S`` (lexicographic) is reduced together with the
    columns to its right; a column left with no entries below the pivots
    of ``S`` lies in the span of ``S``.

    :Args:
        - matrix (:class:`.MatrixFq`): For a parity-check matrix the
          result is the code's minimum distance; for a generator matrix
          it is the dual distance.
        - w_cap (int): Largest set size examined.

    :Kwargs:
        - budget (int): Subset cap, default the ``subsets`` budget.

    :Returns:
        - An exact :class:`.DistanceResult` with the dependent columns as
          witness, or ``value = w_cap + 1`` with ``exact = False`` as a
          certified lower bound.

    :Raises:
        - :exc:`.ParameterException` if the columns are independent
          (the code is zero).
        - :exc:`.BudgetExceededException` if ``C(n, w_cap)`` exceeds the
          cap.
    """
    spec = matrix.spec
    cols = matrix.cols
    cap = budget if budget is not None else DEFAULT.subsets
    needed = utils.binomial(cols, w_cap)
    if needed > cap:
        raise BudgetExceededException("subsets", needed, cap)
    if matfq.rank(matrix) == cols:
        raise ParameterException("Columns are independent: the code is zero")

    entries = matrix.entries
    zero = np.nonzero(~entries.any(axis=0))[0]
    if zero.size:
        return DistanceResult(1, True, DEPENDENT_COLUMNS,
                              witness={'columns': [int(zero[0])]})

    for size in range(2, w_cap + 1):
        for subset in itertools.combinations(range(cols), size - 1):
            rest = list(range(subset[-1] + 1, cols))
            if not rest:
                continue
            block = np.hstack([entries[:, list(subset)], entries[:, rest]])
            reduced, pivots = matfq.rref_array(spec, block,
                                                col_limit=size - 1)
            spanned = ~reduced[len(pivots):, size - 1:].any(axis=0)
            hit = np.nonzero(spanned)[0]
            if hit.size:
                witness = list(subset) + [rest[int(hit[0])]]
                LOG.debug("Dependent columns {0}".format(witness))
                return DistanceResult(size, True, DEPENDENT_COLUMNS,
                                      witness={'columns': witness})

    return DistanceResult(w_cap + 1, False, DEPENDENT_COLUMNS,
                          search_caps=(w_cap, None), status="lower-bound",
                          detail="no dependent set of size <= {0}".format(
                              w_cap))


def krawtchouk(q, n, j, i):
    """``K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i, s) C(n-i, j-s)``."""
    return sum((-1) ** s * (q - 1) ** (j - s) *
               utils.binomial(i, s) * utils.binomial(n - i, j - s)
               for s in range(j + 1))


def macwilliams_transform(distribution, q):
    """Weight distribution of the dual code, in exact integers.

    :Args:
        - distribution (list): ``[A_0, ..., A_n]`` of a linear code.
        - q (int): Field size.

    :Raises:
        - :exc:`.ParameterException` if the input is not the distribution
          of a linear code (non-integral transform).
    """
    n = len(distribution) - 1
    size = sum(distribution)
    dual = []
    for j in range(n + 1):
        total = sum(a * krawtchouk(q, n, j, i)
                    for i, a in enumerate(distribution) if a)
        if total % size:
            raise ParameterException(
                "Weight distribution does not transform to integers")
        dual.append(total // size)
    return dual


def min_nonzero_weight(distribution):
    for weight, count in enumerate(distribution):
        if weight and count:
            return weight
    return None


def dual_distance_enumeration(generator, budget=None):
    """``d`` of the dual code via enumeration and the MacWilliams
    transform."""
    dual = macwilliams_transform(weight_distribution(generator, budget),
                                 generator.spec.q)
    return DistanceResult(min_nonzero_weight(dual), True, ENUMERATION,
                          detail="MacWilliams transform of {0} "
                                 "codewords".format(
                                     generator.spec.q ** generator.rows))


# Free distance.

def _input_blocks(q, k, first_nonzero):
    """Input blocks in order of Hamming weight, then support, then
    values."""
    if not first_nonzero:
        yield np.zeros(k, dtype=np.int64)
    for size in range(1, k + 1):
        for support in itertools.combinations(range(k), size):
            for values in itertools.product(range(1, q), repeat=size):
                block = np.zeros(k, dtype=np.int64)
                block[list(support)] = values
                yield block


def _block_output(spec, matrix, path):
    """Output block at time ``len(path) - 1``."""
    out = np.zeros(matrix.n, dtype=np.int64)
    t = len(path) - 1
    for j in range(min(t, matrix.maxdeg) + 1):
        if path[t - j].any():
            out = np.asarray(spec.add(out, matfq.matmul(
                spec, path[t - j][None, :], matrix.coeffs[:, :, j])[0]))
    return out


def _flush_weight(spec, matrix, path):
    """Weight of the output blocks after the last input with zero input."""
    total = 0
    tail = list(path)
    zero = np.zeros(matrix.k, dtype=np.int64)
    for _ in range(matrix.maxdeg):
        tail.append(zero)
        total += int(np.count_nonzero(_block_output(spec, matrix, tail)))
    return total


def _witness(path, spec):
    """Input blocks as a list of ``k`` coefficient lists."""
    blocks = np.array(path, dtype=np.int64)
    return [[int(c) for c in _trim(blocks[:, i])]
            for i in range(blocks.shape[1])]


def _trim(values):
    values = list(values)
    while values and values[-1] == 0:
        values.pop()
    return values


def _trellis_search(matrix, budget):
    """Dijkstra over encoder states (the last ``mu`` input blocks)."""
    spec = matrix.spec
    k, mu = matrix.k, matrix.maxdeg
    blocks = spec.q ** k
    inputs = _messages(spec, 0, blocks, k)
    contrib = [matfq.matmul(spec, inputs, matrix.coeffs[:, :, j])
               for j in range(mu + 1)]
    modulus = blocks ** max(mu - 1, 0)

    def successors(state):
        base = np.zeros(matrix.n, dtype=np.int64)
        rest = state
        for j in range(1, mu + 1):
            rest, block = divmod(rest, blocks)
            if block:
                base = np.asarray(spec.add(base, contrib[j][block]))
        outputs = np.asarray(spec.add(contrib[0], base[None, :]))
        weights = np.count_nonzero(outputs, axis=1)
        nxt = (np.arange(blocks) + blocks * (state % modulus)
               if mu else np.zeros(blocks, dtype=np.int64))
        return weights, nxt

    best, best_from = None, None
    dist = {}
    parent = {}
    heap = []

    weights, nxt = successors(0)
    for x in range(1, blocks):
        w, s = int(weights[x]), int(nxt[x])
        if s == 0:
            if best is None or w < best:
                best, best_from = w, (None, x)
        elif s not in dist or w < dist[s]:
            dist[s] = w
            parent[s] = (None, x)
            heapq.heappush(heap, (w, s))

    while heap:
        w, state = heapq.heappop(heap)
        if best is not None and w >= best:
            break
        if w > dist[state]:
            continue
        weights, nxt = successors(state)
        for x in range(blocks):
            nw, s = w + int(weights[x]), int(nxt[x])
            if s == 0:
                if best is None or nw < best:
                    best, best_from = nw, (state, x)
            elif s not in dist or nw < dist[s]:
                dist[s] = nw
                parent[s] = (state, x)
                heapq.heappush(heap, (nw, s))

    inputs_path = []
    prev, x = best_from
    inputs_path.append(x)
    while prev is not None:
        prev, x = parent[prev]
        inputs_path.append(x)
    inputs_path.reverse()
    path = [np.array(utils.digits(x, spec.q, k), dtype=np.int64)
            for x in inputs_path]
    return best, _witness(path, spec)


def free_distance_search(matrix, weight_cap=None, degree_cap=None,
                         budget=None):
    """Search for a minimum weight code sequence of ``u(D) G(D)``.

    Exact through a trellis search when the ``q^(k(mu+1))`` transitions
    fit the node budget. Otherwise a branch-and-bound search over inputs
    with ``u_0 != 0`` and ``deg u <= degree_cap``, by increasing degree,
    returns the weight of the best code sequence found as an upper
    witness.

    :Args:
        - matrix (:class:`.PolyMatrix`)

    :Kwargs:
        - weight_cap (int): Partial encodings heavier than this are
          pruned; no cap by default.
        - degree_cap (int): Largest input degree; default ``2 * memory +
          2``.
        - budget (int): Node cap, default the ``search_nodes`` budget.

    :Returns:
        - :class:`.DistanceResult` with method ``trellis-search``. Status
          ``no-witness`` and ``value = None`` when nothing was found below
          the weight cap.
    """
    spec = matrix.spec
    cap = budget if budget is not None else DEFAULT.search_nodes
    mu = matrix.maxdeg
    if degree_cap is None:
        degree_cap = 2 * mu + 2
    caps = (weight_cap, degree_cap)

    if spec.q ** (matrix.k * (mu + 1)) <= cap:
        value, witness = _trellis_search(matrix, cap)
        if weight_cap is not None and value > weight_cap:
            return DistanceResult(None, True, TRELLIS_SEARCH, caps,
                                  status="no-witness",
                                  detail="free distance {0} exceeds the "
                                         "weight cap".format(value))
        return DistanceResult(value, True, TRELLIS_SEARCH,
                              witness={'input': witness},
                              detail="exhaustive state search")

    state = {'nodes': 0, 'best': None, 'path': None, 'exhausted': False}
    limit = weight_cap + 1 if weight_cap is not None else None

    def bound():
        values = [v for v in (state['best'], limit) if v is not None]
        return min(values) if values else None

    def visit(path, partial, depth):
        for block in _input_blocks(spec.q, matrix.k, first_nonzero=not path
                                   or depth == len(path)):
            state['nodes'] += 1
            if state['nodes'] > cap:
                state['exhausted'] = True
                return
            trial = path + [block]
            weight = partial + int(np.count_nonzero(
                _block_output(spec, matrix, trial)))
            top = bound()
            if top is not None and weight >= top:
                continue
            if len(trial) == depth + 1:
                total = weight + _flush_weight(spec, matrix, trial)
                top = bound()
                if top is None or total < top:
                    state['best'] = total
                    state['path'] = trial
            else:
                visit(trial, weight, depth)
            if state['exhausted']:
                return

    for depth in range(degree_cap + 1):
        visit([], 0, depth)
        if state['exhausted']:
            break

    detail = "searched {0} nodes{1}".format(
        min(state['nodes'], cap),
        ", node budget exhausted" if state['exhausted'] else "")
    if state['best'] is None:
        return DistanceResult(None, False, TRELLIS_SEARCH, caps,
                              status="no-witness", detail=detail)
    return DistanceResult(state['best'], False, TRELLIS_SEARCH, caps,
                          witness={'input': _witness(state['path'], spec)},
                          status="upper-witness", detail=detail)


def free_distance_bruteforce(matrix, degree_cap, budget=None):
    """Minimum weight of ``u(D) G(D)`` over every nonzero ``u`` with
    ``deg u <= degree_cap``, by direct polynomial encoding.

    Independent of :func:`free_distance_search`; used to cross-check it on
    small codes.
    """
    spec = matrix.spec
    cap = budget if budget is not None else DEFAULT.search_nodes
    total = spec.q ** (matrix.k * (degree_cap + 1))
    if total > cap:
        raise BudgetExceededException("search_nodes", total, cap)
    best = None
    for index in range(1, total):
        digits = utils.digits(index, spec.q, matrix.k * (degree_cap + 1))
        message = [digits[i * (degree_cap + 1):(i + 1) * (degree_cap + 1)]
                   for i in range(matrix.k)]
        value = weight(encode(message, matrix))
        if best is None or value < best:
            best = value
    return best


# Certification of record bounds.

def _route(label, func, *args, **kwargs):
    try:
        result = func(*args, **kwargs)
        result.detail = (label + (": " + result.detail
                                  if result.detail else ""))
        return result
    except BudgetExceededException as exp:
        LOG.info("{0} skipped: {1}".format(label, exp))
        return None


def block_distance_routes(spec, l, m, param, dual, budgets=None):
    """Run every in-budget oracle for ``d`` or ``d_perp`` of
    ``C_q(param, m; l)``.

    Distances of duals come from dependent columns of the generator, a
    MacWilliams transform of an enumeration, or enumeration of the
    monomially equivalent reflected code; distances of the code itself
    from dependent columns of ``H``, enumeration, or the transform of the
    reflected code's enumeration.

    :Returns:
        - Tuple of the designed value and the list of
          :class:`.DistanceResult` routes that ran.
    """
    budgets = _budgets(budgets)
    code = charcode.build_char_code(spec, l, m, param,
                                    max_size=budgets.group_size)
    reflected = m * (l - 1) - 1 - param
    routes = []

    if dual:
        designed = code.designed_dual_distance
        routes.append(_route(
            "dependent columns of the generator of {0}".format(code.label()),
            min_dependent_columns, code.G, designed, budgets.subsets))
        if spec.q ** code.k <= budgets.codewords:
            routes.append(_route(
                "enumeration of {0}".format(code.label()),
                dual_distance_enumeration, code.G, budgets.codewords))
        if spec.q ** (code.n - code.k) <= budgets.codewords:
            target = charcode.build_char_code(spec, l, m, reflected,
                                              max_size=budgets.group_size)
            routes.append(_route(
                "enumeration of {0}".format(target.label()),
                min_distance_enumeration, target.G, budgets.codewords))
    else:
        designed = code.designed[2]
        routes.append(_route(
            "dependent columns of the parity check of {0}".format(
                code.label()),
            min_dependent_columns, code.H, designed, budgets.subsets))
        if spec.q ** code.k <= budgets.codewords:
            routes.append(_route(
                "enumeration of {0}".format(code.label()),
                min_distance_enumeration, code.G, budgets.codewords))
        if spec.q ** (code.n - code.k) <= budgets.codewords:
            target = charcode.build_char_code(spec, l, m, reflected,
                                              max_size=budgets.group_size)
            routes.append(_route(
                "enumeration of {0}".format(target.label()),
                dual_distance_enumeration, target.G, budgets.codewords))

    return designed, [route for route in routes if route is not None]


def _judge(designed, routes):
    """Status and value from a set of routes."""
    exact = [r.value for r in routes if r.exact]
    lower = [r.value for r in routes if not r.exact]
    if len(set(exact)) > 1:
        return CONTRADICTED, None, "oracles disagree: {0}".format(exact)
    if exact:
        value = exact[0]
        if any(low > value for low in lower):
            return CONTRADICTED, value, "lower bound above exact value"
        if value >= designed:
            return CERTIFIED, value, ""
        return CONTRADICTED, value, "computed {0} < designed {1}".format(
            value, designed)
    if lower and max(lower) >= designed:
        return CERTIFIED, max(lower), "certified as a lower bound"
    return UNCERTIFIED, None, "no oracle within budget"


def _downscale(spec, l, m, param, dual, budgets):
    """The same check on the smaller groups ``Z_l^m'``, ``m' < m``."""
    out = []
    for smaller in range(1, m):
        if param >= smaller * (l - 1):
            continue
        designed, routes = block_distance_routes(spec, l, smaller, param,
                                                 dual, budgets)
        status, value, detail = _judge(designed, routes)
        out.append(collections.OrderedDict([
            ('m', smaller), ('param', param), ('designed', designed),
            ('value', value), ('status', status), ('detail', detail)]))
    return out


def certify_bound(record, budgets=None):
    """Certify the distance bound carried by a construction record.

    Primal records certify ``d_perp`` of ``C_q(r, m; l)`` against the
    designed bound. Dual records certify ``d_0 = d(C_q(u, m; l))`` and
    report the chain ``min(d_0 + d_mu, d) <= d_f_perp <= d``.
    When no oracle fits the budget the status is ``uncertified`` and the
    same check is reported for smaller ``m``.

    :Args:
        - record (:class:`.ConvRecord`)

    :Kwargs:
        - budgets (:class:`.Budgets`)

    :Returns:
        - :class:`.Certificate`
    """
    budgets = _budgets(budgets)
    prov = record.provenance
    spec = record.spec
    l, m = prov['l'], prov['m']
    want_dual = record.bound_kind == "primal"
    param = prov["r"] if want_dual else prov["u"]

    designed, routes = block_distance_routes(spec, l, m, param, want_dual,
                                             budgets)
    status, value, detail = _judge(designed, routes)
    cert = Certificate(record.bound_kind, status, designed, value, routes,
                       detail=detail)

    if status == UNCERTIFIED:
        cert.downscale = _downscale(spec, l, m, param, want_dual, budgets)
        LOG.warning("Bound of {0} not certified within budget; checked "
                    "{1} smaller cases".format(record.label(),
                                               len(cert.downscale)))

    if record.bound_kind == "dual":
        cert.chain = _dual_chain(record, value if status == CERTIFIED
                                 else designed, budgets)
        if status == CERTIFIED and record.df_lower > cert.chain['lower']:
            cert.status = CONTRADICTED
            cert.detail = "chain lower bound below the designed bound"

    elif status != UNCERTIFIED and record.df_lower > designed:
        cert.status = CONTRADICTED
        cert.detail = "record bound above d_perp"

    LOG.info("Bound of {0}: {1}".format(record.label(), cert.status))
    return cert


def _dual_chain(record, d0, budgets):
    """``min(d_0 + d_mu, d) <= d_f_perp <= d`` with ``d_mu`` the distance
    of the kernel of the last slice when it fits the budget, else 1."""
    prov = record.provenance
    spec = record.spec
    l, m, r = prov['l'], prov['m'], prov['r']
    cuts = prov['cuts']
    code = charcode.build_char_code(spec, l, m, r,
                                    max_size=budgets.group_size)
    d = code.designed[2]
    last = code.band(cuts[-1], cuts[-2])

    d_mu, d_mu_exact = 1, False
    for w_cap in range(2, d + 1):
        try:
            result = min_dependent_columns(last, w_cap, budgets.subsets)
        except (BudgetExceededException, ParameterException):
            break
        if result.exact:
            d_mu, d_mu_exact = result.value, True
            break
        d_mu = result.value

    return collections.OrderedDict([
        ('d0', d0),
        ('d_mu', d_mu),
        ('d_mu_exact', d_mu_exact),
        ('d', d),
        ('lower', min(d0 + d_mu, d)),
        ('upper', d),
    ])
