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
Convolutional codes from character-code parity-check matrices.

The parity-check matrix ``H`` of ``C_q(r, m; l)`` is cut into contiguous
weight bands ``H_0 .. H_mu`` (highest weights first). Padding every band
with zero rows to ``kappa = rows(H_0)`` rows gives
``G(D) = sum(H~_i D^i)``.
"""

import collections
import logging
import multiprocessing

from . import charcode
from . import distance
from . import gf
from . import log
from . import matfq
from . import polymat
from . import utils
from .config import DEFAULT
from .matfq import pad_zero_rows, rank
from .polymat import ConvParams, PolyMatrix
from .exceptions import (
    BudgetExceededException,
    MalformedFileException,
    ParameterException,
    PreconditionException,
    ProvenanceException,
    RankConditionException,
    RankDeficientException)

LOG = logging.getLogger('charconv')

PRIMAL = "primal"
DUAL = "dual"

THEOREMS = ("t2", "cor1", "t3", "t4", "multi")

REQUIRED = {
    't2': ('m', 'r', 'u'),
    'cor1': ('m', 'r', 'u'),
    't3': ('m', 'r', 'v', 'u'),
    't4': ('m', 'r', 'u'),
    'multi': ('m', 'cuts'),
}

RECORD_KIND = "charconv-record"
RECORD_VERSION = 1


Condition = collections.namedtuple(
    'Condition', ['name', 'holds', 'values', 'strict'])
Condition.__doc__ = """A named precondition and whether it holds.

``strict`` conditions are the literal printed forms; they only block a
construction in strict mode.
"""


class ConvRecord(object):
    """
    A constructed convolutional code, or for dual records a parameter
    certificate without a generator matrix.

    :Attributes:
        - spec (:class:`.FieldSpec`)
        - G (:class:`.PolyMatrix`): ``None`` for dual records.
        - params (:class:`.ConvParams`): ``memory`` and ``row_degrees``
          are ``None`` for dual records.
        - kappa (int): Rows of ``H_0``.
        - df_lower (int): Designed free distance lower bound.
        - df_upper (int): Upper bound when known (dual records).
        - bound_kind (str): ``"primal"`` (``d_f >= d_perp``) or ``"dual"``
          (``d_f_perp >= d_0 + 1``).
        - provenance (dict): theorem, q, l, m, r, u, v, cuts.
        - slices (list): Row ranges and weight bands of ``H_0 .. H_mu``.
        - designed (dict): The theorem's formula values.
        - annotations (list): Differences between printed and computed
          values.
    """

    def __init__(self, spec, G, params, kappa, df_lower, bound_kind,
                 provenance, slices, designed=None, df_upper=None,
                 annotations=None):
        self.spec = spec
        self.G = G
        self.params = params
        self.kappa = kappa
        self.df_lower = df_lower
        self.df_upper = df_upper
        self.bound_kind = bound_kind
        self.provenance = provenance
        self.slices = slices
        self.designed = designed or collections.OrderedDict()
        self.annotations = annotations or []

    @property
    def memory_text(self):
        return "μ" if self.params.memory is None else str(self.params.memory)

    def label(self):
        """``(n, k, delta; mu, d_f >= bound)_q``."""
        return "({0}, {1}, {2}; {3}, d_f ≥ {4})_{5}".format(
            self.params.n, self.params.k, self.params.degree,
            self.memory_text, self.df_lower, self.spec.q)

    def parameter_tuple(self):
        return (self.params.n, self.params.k, self.params.degree,
                self.params.memory, self.df_lower)

    def __repr__(self):
        return "ConvRecord({0} {1})".format(self.provenance.get('theorem'),
                                            self.label())

    def to_dict(self):
        """Structured document; ``G`` is embedded in the polynomial
        matrix text format."""
        params = collections.OrderedDict([
            ('n', self.params.n),
            ('k', self.params.k),
            ('degree', self.params.degree),
            ('memory', self.params.memory),
            ('row_degrees', list(self.params.row_degrees)
             if self.params.row_degrees is not None else None),
        ])
        return collections.OrderedDict([
            ('kind', RECORD_KIND),
            ('version', RECORD_VERSION),
            ('label', self.label()),
            ('field', str(self.spec)),
            ('provenance', self.provenance),
            ('params', params),
            ('kappa', self.kappa),
            ('df_lower', self.df_lower),
            ('df_upper', self.df_upper),
            ('bound_kind', self.bound_kind),
            ('slices', self.slices),
            ('designed', self.designed),
            ('annotations', self.annotations),
            ('G', self.G.format() if self.G is not None else None),
        ])

    @classmethod
    def from_dict(cls, doc):
        """Inverse of :meth:`to_dict`.

        :Raises:
            - :exc:`.MalformedFileException` if the document is not a
              record.
        """
        if not isinstance(doc, dict) or doc.get('kind') != RECORD_KIND:
            raise MalformedFileException("Not a charconv record document")
        try:
            spec = gf.FieldSpec.parse(doc['field'])
            raw = doc['params']
            params = ConvParams(
                raw['n'], raw['k'],
                tuple(raw['row_degrees'])
                if raw['row_degrees'] is not None else None,
                raw['degree'], raw['memory'])
            G = (PolyMatrix.parse(doc['G'], spec)
                 if doc['G'] is not None else None)
            provenance = collections.OrderedDict(doc['provenance'])
            provenance['cuts'] = list(provenance['cuts'])
            return cls(spec, G, params, doc['kappa'], doc['df_lower'],
                       doc['bound_kind'], provenance, doc['slices'],
                       doc.get('designed'), doc.get('df_upper'),
                       doc.get('annotations'))
        except (KeyError, TypeError, ValueError, ParameterException) as exp:
            raise MalformedFileException(
                "Invalid record document: {0}".format(exp))


# Splitting and assembly.

def split_parity_check(H, row_counts):
    """Cut ``H`` into contiguous slices, top to bottom.

    :Args:
        - H (:class:`.MatrixFq`)
        - row_counts (list): Rows per slice; each at least 1.

    :Returns:
        - List of :class:`.MatrixFq` slices ``[H_0, .., H_mu]``.

    :Raises:
        - :exc:`.ParameterException` if the counts do not partition ``H``.
    """
    row_counts = [int(c) for c in row_counts]
    if any(c < 1 for c in row_counts) or sum(row_counts) != H.rows:
        raise ParameterException(
            "Row counts {0} do not partition {1} rows".format(row_counts,
                                                               H.rows))
    slices = []
    start = 0
    for count in row_counts:
        slices.append(matfq.take_rows(H, range(start, start + count)))
        start += count
    return slices


def assemble_generator(slices):
    """``G(D) = sum(H~_i D^i)`` with ``H~_i`` padded to ``kappa`` rows.

    :Raises:
        - :exc:`.RankConditionException` naming the slice if
          ``rank(H_0) < rows(H_0)``, or a later slice has rank or rows
          above ``kappa``.
    """
    slices = list(slices)
    if not slices:
        raise ParameterException("No slices to assemble")
    kappa = slices[0].rows
    head_rank = rank(slices[0])
    if head_rank != kappa:
        raise RankConditionException(
            0, "rank(H_0) = {0} < rows(H_0) = {1}".format(head_rank, kappa),
            {'rank': head_rank, 'rows': kappa})
    for index, block in enumerate(slices[1:], 1):
        block_rank = rank(block)
        if block_rank > kappa or block.rows > kappa:
            raise RankConditionException(
                index, "slice {0} has rank {1} and {2} rows, kappa = "
                "{3}".format(index, block_rank, block.rows, kappa),
                {'rank': block_rank, 'rows': block.rows, 'kappa': kappa})
    padded = [pad_zero_rows(block, kappa) for block in slices]
    return PolyMatrix.from_coefficients(padded)


# Preconditions.

def _binomial_band(m, low, high):
    """``sum(C(m, i) for low < i <= high)``."""
    return sum(utils.binomial(m, i) for i in range(low + 1, high + 1))


def unit_memory_binary_conditions(m, r, u):
    tail = _binomial_band(m, u, m)
    band = _binomial_band(m, r, u)
    values = {'m': m, 'r': r, 'u': u, 'tail': tail, 'band': band}
    return [
        Condition("m_ge_3", m >= 3, values, False),
        Condition("r_u_order", 1 <= r < u < m, values, False),
        Condition("tail_ge_band", tail >= band, values, False),
        Condition("strict_tail_gt_band", tail > band, values, True),
    ]


def two_memory_binary_conditions(m, r, v, u):
    tail = _binomial_band(m, u, m)
    low = _binomial_band(m, r, v)
    mid = _binomial_band(m, v, u)
    values = {'m': m, 'r': r, 'v': v, 'u': u, 'tail': tail,
              'low_band': low, 'mid_band': mid}
    return [
        Condition("m_ge_4", m >= 4, values, False),
        Condition("r_v_u_order", 1 <= r < v < u < m, values, False),
        Condition("tail_ge_low_band", tail >= low, values, False),
        Condition("low_band_ge_mid_band", low >= mid, values, False),
        Condition("strict_tail_gt_low_band", tail > low, values, True),
        Condition("strict_low_band_gt_mid_band", low > mid, values, True),
    ]


def unit_memory_lary_conditions(q, l, m, r, u):
    top = m * (l - 1)
    in_range = 1 <= r < u < top
    tail = charcode.weight_band(m, l, u, top) if in_range else 0
    band = charcode.weight_band(m, l, r, u) if in_range else 0
    literal = charcode.weight_band(m, l, u, m) if in_range else 0
    values = {'q': q, 'l': l, 'm': m, 'r': r, 'u': u, 'tail': tail,
              'band': band, 'literal_tail': literal}
    return [
        Condition("m_ge_3", m >= 3, values, False),
        Condition("l_ge_3", l >= 3, values, False),
        Condition("l_divides_q_minus_1", (q - 1) % l == 0, values, False),
        Condition("r_u_order", in_range, values, False),
        Condition("tail_ge_band", tail >= band, values, False),
        Condition("literal_tail_ge_band", literal >= band, values, True),
    ]


def multi_memory_conditions(q, l, m, cuts):
    cuts = list(cuts)
    top = m * (l - 1)
    ordered = (len(cuts) >= 1 and cuts[-1] >= 0 and cuts[0] < top and
               all(a > b for a, b in zip(cuts, cuts[1:])))
    values = {'q': q, 'l': l, 'm': m, 'cuts': cuts}
    return [
        Condition("l_divides_q_minus_1", (q - 1) % l == 0, values, False),
        Condition("cuts_descending", ordered, values, False),
    ]


def _enforce(conditions, strict):
    failed = [c for c in conditions if not c.holds and (strict or
                                                         not c.strict)]
    if failed:
        first = failed[0]
        raise PreconditionException(
            first.name, "{0} does not hold for {1}".format(
                first.name, _describe(first.values)), first.values)


def _describe(values):
    return ", ".join("{0}={1}".format(k, values[k]) for k in sorted(values))


def _literal_notes(conditions):
    """Annotations for literal conditions that fail while the
    constructions' own conditions hold."""
    notes = []
    for cond in conditions:
        if cond.strict and not cond.holds:
            notes.append(collections.OrderedDict([
                ('locus', 'precondition'),
                ('printed', cond.name),
                ('computed', 'fails for ' + _describe(cond.values)),
                ('note', 'literal printed condition does not hold; the '
                         'construction uses the non-strict form'),
            ]))
    return notes


# Construction.

def definition_degree(band_sizes):
    """Degree of ``sum(H~_i D^i)`` from the slice sizes ``rho_0..rho_mu``.

    Row ``j`` has degree ``max{i : rho_i > j}``.
    """
    kappa = band_sizes[0]
    total = 0
    for j in range(kappa):
        total += max([i for i, size in enumerate(band_sizes) if size > j])
    return total


def _field(q, budgets):
    return gf.field_of_order(q, max_size=budgets.field_size)


def _build(spec, l, m, cuts, budgets):
    """Split ``H`` of ``C_q(cuts[-1], m; l)`` at ``cuts`` and assemble."""
    code = charcode.build_char_code(spec, l, m, cuts[-1],
                                    max_size=budgets.group_size)
    top = m * (l - 1)
    bounds = [top] + list(cuts)
    slices_info = []
    counts = []
    for index in range(len(cuts)):
        high, low = bounds[index], bounds[index + 1]
        rows = code.rows_with_weight(low, high)
        if not rows:
            raise PreconditionException(
                "nonempty_slice", "slice {0} (weights {1}..{2}) is "
                "empty".format(index, low + 1, high),
                {'slice': index, 'low': low, 'high': high})
        counts.append(len(rows))
        slices_info.append(collections.OrderedDict([
            ('index', index),
            ('weights', [low + 1, high]),
            ('rows', [rows[0], rows[-1] + 1]),
        ]))

    slices = split_parity_check(code.H, counts)
    G = assemble_generator(slices)
    return code, G, polymat.params(G), slices_info


def _record(spec, G, params, slices_info, df_lower, provenance, designed,
            annotations):
    record = ConvRecord(spec, G, params, slices_info[0]['rows'][1], df_lower,
                        PRIMAL, provenance, slices_info, designed,
                        annotations=annotations)
    LOG.info("Constructed {0} from {1}".format(record.label(),
                                               provenance['theorem']))
    return record


def _provenance(theorem, q, l, m, r, u=None, v=None, cuts=()):
    return collections.OrderedDict([
        ('theorem', theorem), ('q', q), ('l', l), ('m', m), ('r', r),
        ('u', u), ('v', v), ('cuts', list(cuts))])


def construct_unit_memory_binary(q, m, r, u, strict=False, budgets=None):
    """Unit memory ``(2^m, 2^m - s_m(u), s_m(u) - s_m(r); 1,
    d_f >= 2^(r+1))_q`` code from ``C_q(r, m)`` split at weight ``u``.

    :Args:
        - q (int): Odd prime power.
        - m (int): ``m >= 3``.
        - r (int), u (int): ``1 <= r < u < m``.

    :Kwargs:
        - strict (bool): Also require the strict ``>`` form of the tail
          condition.
        - budgets (:class:`.Budgets`)

    :Returns:
        - :class:`.ConvRecord`

    :Raises:
        - :exc:`.PreconditionException` naming the failed condition.
        - :exc:`.ParameterException` for an invalid field.
    """
    budgets = budgets or DEFAULT
    conditions = unit_memory_binary_conditions(m, r, u)
    _enforce(conditions, strict)
    spec = _field(q, budgets)
    cuts = (u, r)
    prov = _provenance("t2", q, 2, m, r, u=u, cuts=cuts)
    _, G, params, info = _build(spec, 2, m, cuts, budgets)
    designed = collections.OrderedDict([
        ('n', 2 ** m),
        ('k', 2 ** m - charcode.s_m(m, u)),
        ('degree', charcode.s_m(m, u) - charcode.s_m(m, r)),
        ('memory', 1),
        ('df_lower', 2 ** (r + 1)),
    ])
    return _record(spec, G, params, info, 2 ** (r + 1), prov, designed,
                   _literal_notes(conditions))


def construct_two_memory_binary(q, m, r, v, u, strict=False, budgets=None):
    """Two memory code from ``C_q(r, m)`` split at weights ``u`` and
    ``v``.

    The slices are the rows of weight above ``u``, in ``(v, u]`` and in
    ``(r, v]``. The record's degree is read off ``G(D)``; the printed
    theorem value ``sum(C(m, i), r < i <= v)`` is kept in ``designed``
    and annotated when it differs.

    :Raises:
        - :exc:`.PreconditionException` naming the failed condition.
    """
    budgets = budgets or DEFAULT
    conditions = two_memory_binary_conditions(m, r, v, u)
    _enforce(conditions, strict)
    spec = _field(q, budgets)
    cuts = (u, v, r)
    prov = _provenance("t3", q, 2, m, r, u=u, v=v, cuts=cuts)
    _, G, params, info = _build(spec, 2, m, cuts, budgets)

    bands = [_binomial_band(m, u, m), _binomial_band(m, v, u),
             _binomial_band(m, r, v)]
    printed = bands[2]
    designed = collections.OrderedDict([
        ('n', 2 ** m),
        ('k', 2 ** m - charcode.s_m(m, u)),
        ('degree', definition_degree(bands)),
        ('printed_degree', printed),
        ('memory', 2),
        ('df_lower', 2 ** (r + 1)),
    ])
    annotations = _literal_notes(conditions)
    if params.degree != printed:
        annotations.append(collections.OrderedDict([
            ('locus', 'two-memory theorem, degree'),
            ('printed', printed),
            ('computed', params.degree),
            ('note', 'printed degree is rank(H~_2); the sum of row degrees '
                     'of G(D) counts the D^2 rows twice'),
        ]))
        LOG.warning("Two memory degree differs from the printed value: "
                    "{0} != {1}".format(params.degree, printed))
    return _record(spec, G, params, info, 2 ** (r + 1), prov, designed,
                   annotations)


def construct_unit_memory_lary(q, l, m, r, u, strict=False, budgets=None):
    """Unit memory ``(l^m, l^m - S_m(u), S_m(u) - S_m(r); 1,
    d_f >= (b+2) l^a)_q`` code from ``C_q(r, m; l)``.

    The tail condition sums weights up to ``m(l-1)``; strict mode also
    requires the literal form with upper limit ``m``.

    :Raises:
        - :exc:`.PreconditionException` naming the failed condition.
    """
    budgets = budgets or DEFAULT
    conditions = unit_memory_lary_conditions(q, l, m, r, u)
    _enforce(conditions, strict)
    spec = _field(q, budgets)
    cuts = (u, r)
    prov = _provenance("t4", q, l, m, r, u=u, cuts=cuts)
    _, G, params, info = _build(spec, l, m, cuts, budgets)
    bound = charcode.designed_dual_distance(l, r)
    designed = collections.OrderedDict([
        ('n', l ** m),
        ('k', l ** m - charcode.S_m(m, u, l)),
        ('degree', charcode.S_m(m, u, l) - charcode.S_m(m, r, l)),
        ('memory', 1),
        ('df_lower', bound),
    ])
    return _record(spec, G, params, info, bound, prov, designed,
                   _literal_notes(conditions))


def construct_multi_memory(q, l, m, cuts, strict=False, budgets=None):
    """General ``mu``-memory code from ``C_q(cuts[-1], m; l)``.

    :Args:
        - cuts (list): ``u_0 > u_1 > .. > u_mu = r >= 0``; slice ``i`` holds
          the rows of weight in ``(u_i, u_(i-1)]``, slice 0 those above
          ``u_0``. A single cut gives a constant generator.

    :Raises:
        - :exc:`.PreconditionException` for bad cuts.
        - :exc:`.RankConditionException` if a slice outranks ``H_0``.
    """
    budgets = budgets or DEFAULT
    cuts = tuple(int(c) for c in cuts)
    conditions = multi_memory_conditions(q, l, m, cuts)
    _enforce(conditions, strict)
    spec = _field(q, budgets)
    r = cuts[-1]
    prov = _provenance("multi", q, l, m, r, u=cuts[0],
                       v=cuts[1] if len(cuts) == 3 else None, cuts=cuts)
    _, G, params, info = _build(spec, l, m, cuts, budgets)
    top = m * (l - 1)
    bounds = [top] + list(cuts)
    bands = [charcode.weight_band(m, l, bounds[i + 1], bounds[i])
             for i in range(len(cuts))]
    bound = charcode.designed_dual_distance(l, r)
    designed = collections.OrderedDict([
        ('n', l ** m),
        ('k', bands[0]),
        ('degree', definition_degree(bands)),
        ('memory', len(cuts) - 1),
        ('df_lower', bound),
    ])
    return _record(spec, G, params, info, bound, prov, designed, [])


def dual_record(record):
    """Designed parameters of the dual of a unit memory record.

    ``k = S_m(u)``, the same degree, memory unknown (printed ``μ``),
    ``d_f_perp >= d_0 + 1`` with ``d_0`` the designed distance of
    ``C_q(u, m; l)``, and ``d_f_perp <= d`` with ``d`` that of
    ``C_q(r, m; l)``. No generator matrix is built.

    :Raises:
        - :exc:`.ProvenanceException` unless the record comes from the
          binary or l-ary unit memory construction.
    """
    prov = record.provenance
    if record.bound_kind != PRIMAL or prov.get('theorem') not in ("t2",
                                                                  "t4"):
        raise ProvenanceException(
            "Dual records are built from unit memory records, got "
            "{0}".format(prov.get('theorem')))
    l, m, r, u = prov['l'], prov['m'], prov['r'], prov['u']
    n = l ** m
    k = charcode.S_m(m, u, l)
    degree = charcode.S_m(m, u, l) - charcode.S_m(m, r, l)
    d0 = charcode.designed_parameters(l, m, u)[2]
    d = charcode.designed_parameters(l, m, r)[2]

    dual_prov = collections.OrderedDict(prov)
    dual_prov['theorem'] = "cor1" if l == 2 else "t4-dual"
    designed = collections.OrderedDict([
        ('n', n), ('k', k), ('degree', degree), ('memory', None),
        ('df_lower', d0 + 1), ('d0', d0), ('d', d)])
    params = ConvParams(n, k, None, degree, None)
    dual = ConvRecord(record.spec, None, params, k, d0 + 1, DUAL, dual_prov,
                      record.slices, designed, df_upper=d)
    LOG.info("Dual record {0}".format(dual.label()))
    return dual


def construct(theorem, q, l=2, m=None, r=None, u=None, v=None, cuts=None,
              strict=False, budgets=None):
    """Dispatch on the theorem name used by the command line.

    :Raises:
        - :exc:`.ParameterException` for an unknown theorem or a missing
          parameter.
    """
    given = {'m': m, 'r': r, 'u': u, 'v': v, 'cuts': cuts}
    missing = [name for name in REQUIRED.get(theorem, ())
               if given[name] is None]
    if missing:
        raise ParameterException("Theorem '{0}' needs {1}".format(
            theorem, ", ".join("--" + name for name in missing)))
    if theorem == "t2":
        return construct_unit_memory_binary(q, m, r, u, strict, budgets)
    if theorem == "cor1":
        return dual_record(construct_unit_memory_binary(q, m, r, u, strict,
                                                        budgets))
    if theorem == "t3":
        return construct_two_memory_binary(q, m, r, v, u, strict, budgets)
    if theorem == "t4":
        return construct_unit_memory_lary(q, l, m, r, u, strict, budgets)
    if theorem == "multi":
        return construct_multi_memory(q, l, m, cuts, strict, budgets)
    raise ParameterException("Unknown theorem '{0}'".format(theorem))


def rebuild(record, budgets=None):
    """The primal record behind a record's provenance."""
    prov = record.provenance
    theorem = prov['theorem']
    if theorem in ("cor1", "t4-dual"):
        theorem = "t2" if theorem == "cor1" else "t4"
    return construct(theorem, prov['q'], prov['l'], prov['m'], prov['r'],
                     prov['u'], prov['v'], prov['cuts'], budgets=budgets)


# Verification.

Check = collections.namedtuple('Check', ['name', 'status', 'detail'])
Check.__doc__ = """One verification outcome; status is pass, fail or
skip."""


class VerificationReport(object):
    """
    Outcome of :func:`verify_record`.

    :Attributes:
        - checks (list): :class:`Check` entries in execution order.
        - certificate (:class:`.Certificate`): ``None`` when not run.
    """

    def __init__(self, record):
        self.record = record
        self.checks = []
        self.certificate = None

    def add(self, name, passed, detail=""):
        status = "skip" if passed is None else ("pass" if passed else "fail")
        self.checks.append(Check(name, status, detail))
        if status == "fail":
            LOG.warning("Check {0} failed for {1}: {2}".format(
                name, self.record.label(), detail))

    @property
    def passed(self):
        return all(c.status != "fail" for c in self.checks)

    def to_dict(self):
        return collections.OrderedDict([
            ('passed', self.passed),
            ('checks', [collections.OrderedDict(c._asdict())
                        for c in self.checks]),
            ('certificate', self.certificate.to_dict()
             if self.certificate is not None else None),
        ])


def _slice_matrices(record):
    """``H_i`` recovered from the coefficients of ``G(D)``."""
    out = []
    for info in record.slices:
        count = info['rows'][1] - info['rows'][0]
        coefficient = record.G.coefficient(info['index'])
        out.append((matfq.take_rows(coefficient, range(count)),
                    matfq.take_rows(coefficient,
                                    range(count, coefficient.rows))))
    return out


def _check_structure(report, record):
    G = record.G
    slices = _slice_matrices(record)
    kappa = record.kappa
    head = slices[0][0]
    head_rank = rank(head)
    report.add("kappa_rank", head_rank == kappa == G.k,
               "rank(H_0) = {0}, kappa = {1}, k = {2}".format(
                   head_rank, kappa, G.k))

    ranks = [rank(block) for block, _ in slices[1:]]
    report.add("slice_ranks", all(x <= kappa for x in ranks),
               "rank(H_i) = {0}".format(ranks))
    report.add("zero_padding", all(pad.is_zero() for _, pad in slices) and
               G.maxdeg <= len(slices) - 1,
               "padding rows are zero")

    params = polymat.params(G)
    designed = record.designed
    bands = [info['rows'][1] - info['rows'][0] for info in record.slices]
    expected = (designed.get('n'), designed.get('k'),
                definition_degree(bands), designed.get('memory'))
    actual = (params.n, params.k, params.degree, params.memory)
    report.add("params_formula", actual == expected and
               params == record.params,
               "G(D) gives (n, k, degree, memory) = {0}, formulas give "
               "{1}".format(actual, expected))
    if 'printed_degree' not in designed:
        report.add("degree_formula", params.degree == designed.get('degree'),
                   "degree {0}, theorem {1}".format(params.degree,
                                                    designed.get('degree')))


def _check_basic_reduced(report, record):
    G = record.G
    try:
        basic = polymat.is_basic(G)
    except RankDeficientException as exp:
        report.add("basic", False, str(exp))
        report.add("reduced", False, "generator is rank deficient")
        return
    if basic.basic:
        product = polymat.multiply(G, basic.right_inverse)
        report.add("basic", polymat.is_identity(product),
                   "right inverse of degree {0} via {1}, G R = I "
                   "verified".format(basic.right_inverse.maxdeg,
                                     basic.method))
    else:
        report.add("basic", False, "nonunit invariant factor {0}".format(
            polymat.format_poly(basic.invariant_factor)))
    try:
        report.add("reduced", polymat.is_reduced(G),
                   "rank of the high order coefficient matrix")
    except RankDeficientException as exp:
        report.add("reduced", False, str(exp))


def window_orthogonal(G, code):
    """``True`` if every coefficient block of ``G(D)`` is orthogonal to
    the block code."""
    generator = code.G
    for power in range(G.maxdeg + 1):
        if not G.coefficient(power).dot(generator.T).is_zero():
            return False
    return True


def verify_record(record, budgets=None, certify=True):
    """Check every structural claim made for a record.

    Primal records: ``kappa = rank(H_0)``, ``rank(H_i) <= kappa``,
    parameters against the formulas, basic with a verified right inverse,
    reduced, and orthogonality of each ``H~_i`` to ``C_q(r, m; l)``.
    Dual records repeat the window check on the rebuilt primal code and
    check the dimension bookkeeping. The distance certificate is attached
    when ``certify`` is set.

    Failures are report entries, never exceptions.

    :Returns:
        - :class:`.VerificationReport`
    """
    budgets = budgets or DEFAULT
    report = VerificationReport(record)
    prov = record.provenance
    spec = record.spec

    try:
        code = charcode.build_char_code(spec, prov['l'], prov['m'],
                                        prov['r'],
                                        max_size=budgets.group_size)
    except ParameterException as exp:
        report.add("provenance", False, str(exp))
        return report

    if record.bound_kind == PRIMAL:
        if record.G is None:
            report.add("generator", False, "primal record without G(D)")
            return report
        _check_structure(report, record)
        _check_basic_reduced(report, record)
        report.add("window_orthogonality", window_orthogonal(record.G, code),
                   "H~_i G_C^T = 0 for C = {0}".format(code.label()))
    else:
        primal = rebuild(record, budgets)
        report.add("dual_dimension",
                   primal.params.k + record.params.k == record.params.n and
                   record.params.degree == primal.params.degree,
                   "k + k_perp = {0}, n = {1}".format(
                       primal.params.k + record.params.k, record.params.n))
        report.add("window_orthogonality",
                   window_orthogonal(primal.G, code),
                   "H~_i G_C^T = 0 for C = {0}".format(code.label()))

    if certify:
        cert = distance.certify_bound(record, budgets)
        report.certificate = cert
        passed = {distance.CERTIFIED: True,
                  distance.CONTRADICTED: False}.get(cert.status)
        report.add("distance_bound", passed, "{0}: {1}".format(
            cert.status, cert.detail or "d = {0}, designed {1}".format(
                cert.value, cert.designed)))
    return report


# Parameter sweeps.

def valid_parameters(theorem, m_values, q=3, l=2, strict=False):
    """All parameter tuples the theorem accepts, by arithmetic only.

    :Returns:
        - Sorted list of dicts with keys ``m``, ``r``, ``u`` (and ``v``).
    """
    found = []
    for m in m_values:
        if theorem in ("t2", "cor1"):
            for r in range(1, m):
                for u in range(r + 1, m):
                    conds = unit_memory_binary_conditions(m, r, u)
                    if _all_hold(conds, strict):
                        found.append({'m': m, 'r': r, 'u': u})
        elif theorem == "t3":
            for r in range(1, m):
                for v in range(r + 1, m):
                    for u in range(v + 1, m):
                        conds = two_memory_binary_conditions(m, r, v, u)
                        if _all_hold(conds, strict):
                            found.append({'m': m, 'r': r, 'v': v, 'u': u})
        elif theorem == "t4":
            top = m * (l - 1)
            for r in range(1, top):
                for u in range(r + 1, top):
                    conds = unit_memory_lary_conditions(q, l, m, r, u)
                    if _all_hold(conds, strict):
                        found.append({'m': m, 'r': r, 'u': u})
        else:
            raise ParameterException(
                "No parameter grid for theorem '{0}'".format(theorem))
    return found


def _all_hold(conditions, strict):
    return all(c.holds for c in conditions if strict or not c.strict)


def designed_tuple(theorem, q, l, m, r, u, v=None):
    """``(n, k, degree, memory, df_lower)`` from the formulas alone; memory
    is ``None`` for the dual."""
    if theorem == "t2":
        return (2 ** m, 2 ** m - charcode.s_m(m, u),
                charcode.s_m(m, u) - charcode.s_m(m, r), 1, 2 ** (r + 1))
    if theorem == "cor1":
        return (2 ** m, charcode.s_m(m, u),
                charcode.s_m(m, u) - charcode.s_m(m, r), None,
                2 ** (m - u) + 1)
    if theorem == "t3":
        bands = [_binomial_band(m, u, m), _binomial_band(m, v, u),
                 _binomial_band(m, r, v)]
        return (2 ** m, 2 ** m - charcode.s_m(m, u), definition_degree(bands),
                2, 2 ** (r + 1))
    if theorem == "t4":
        return (l ** m, l ** m - charcode.S_m(m, u, l),
                charcode.S_m(m, u, l) - charcode.S_m(m, r, l), 1,
                charcode.designed_dual_distance(l, r))
    raise ParameterException("Unknown theorem '{0}'".format(theorem))


def sweep_task(task):
    """Build and structurally verify one parameter tuple.

    Module level so it can be sent to pool workers.

    :Args:
        - task (tuple): ``(theorem, q, l, params, budgets)``.

    :Returns:
        - An ordered dict describing the outcome.
    """
    theorem, q, l, params, budgets = task
    row = collections.OrderedDict([('theorem', theorem), ('q', q),
                                   ('l', l)])
    row.update((key, params.get(key)) for key in ('m', 'r', 'v', 'u'))
    try:
        record = construct(theorem, q, l, params['m'], params['r'],
                           params.get('u'), params.get('v'),
                           budgets=budgets)
        row['label'] = record.label()
        row['tuple'] = list(record.parameter_tuple())
        if record.bound_kind == PRIMAL:
            report = verify_record(record, budgets, certify=False)
            row['passed'] = report.passed
            row['checks'] = [c.name for c in report.checks
                             if c.status == "fail"]
        else:
            row['passed'] = True
            row['checks'] = []
    except (PreconditionException, ParameterException,
            BudgetExceededException) as exp:
        row['label'] = None
        row['tuple'] = None
        row['passed'] = False
        row['checks'] = [str(exp)]
    return row


def _sort_key(row):
    return (row['theorem'], row['q'], row['l'], row['m'], row['r'],
            row['v'] or 0, row['u'] or 0)


def sweep(theorem, q_values, m_values, l=2, workers=0, budgets=None):
    """Construct and verify every valid tuple of a theorem.

    :Args:
        - theorem (str): One of ``t2``, ``cor1``, ``t3``, ``t4``.
        - q_values (list): Field sizes.
        - m_values (list): Group ranks.

    :Kwargs:
        - l (int): Group exponent for ``t4``.
        - workers (int): Pool size; 0 runs in this process.
        - budgets (:class:`.Budgets`)

    :Returns:
        - List of result rows sorted by parameters, independent of the
          order in which workers finish.
    """
    budgets = budgets or DEFAULT
    tasks = []
    for q in q_values:
        if theorem == "t4" and (q - 1) % l:
            LOG.info("Skipping q={0}: l={1} does not divide q-1".format(q, l))
            continue
        for params in valid_parameters(theorem, m_values, q=q, l=l):
            tasks.append((theorem, q, l if theorem == "t4" else 2, params,
                          budgets))
    LOG.info("Sweeping {0} tuples of {1} with {2} workers".format(
        len(tasks), theorem, workers))

    if workers and len(tasks) > 1:
        level = logging.getLogger(log.LOG_NAME).getEffectiveLevel()
        pool = multiprocessing.Pool(processes=workers,
                                    initializer=log.init_worker,
                                    initargs=(level,))
        try:
            rows = pool.map(sweep_task, tasks)
        finally:
            pool.close()
            pool.join()
    else:
        rows = [sweep_task(task) for task in tasks]
    return sorted(rows, key=_sort_key)
