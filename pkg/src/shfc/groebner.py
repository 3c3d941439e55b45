"""Buchberger engine for graded submodules of free modules, with syzygies.

Module terms are pairs (position, monomial) ordered position-over-term: a
lower generator index dominates, ties broken by grevlex on the monomial.
Kernels are computed with an elimination order on the graph of the map:
inside target + source, every target term beats every source term, so the
Groebner elements supported entirely in the source block cut out exactly
the kernel.

Pair pruning uses the chain criterion (valid for modules) and the product
criterion only in its valid scope: both elements supported entirely in one
common position, which is the embedded ideal case. The coprime-lead shortcut
is false for general module elements, e.g. x*e1 + y*e2 and y*e1 + x*e2.
"""

from __future__ import annotations

import heapq

from .modules import GradedFreeModule, GradedMap
from .rings import Polynomial, grevlex_key

_MAX_STEPS = 2_000_000


def _term_key(term):
    pos, mono = term
    return (-pos,) + grevlex_key(mono)


def _lead(f):
    return max(f, key=_term_key)


def _mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _mono_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mono_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _e_degree(f, degrees):
    pos, mono = next(iter(f))
    return sum(mono) + degrees[pos]


def _make_monic(f, ring):
    lt = _lead(f)
    c = f[lt]
    if c == ring.coeff(1):
        return f
    inv = ring.cinv(c)
    return {t: ring.cmul(v, inv) for t, v in f.items()}


def _spoly(f, g, ring):
    """S-element of two monic elements with leads in the same position."""
    (pos, mf) = _lead(f)
    (_, mg) = _lead(g)
    u = _mono_lcm(mf, mg)
    sf = _mono_sub(u, mf)
    sg = _mono_sub(u, mg)
    out = {}
    zero = ring.czero()
    for (p, m), c in f.items():
        key = (p, _mono_add(m, sf))
        v = ring.cadd(out.get(key, zero), c)
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    for (p, m), c in g.items():
        key = (p, _mono_add(m, sg))
        v = ring.csub(out.get(key, zero), c)
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def _normal_form(f, basis, leads, ring):
    """Full reduction of f against a list of monic elements."""
    out = {}
    work = dict(f)
    zero = ring.czero()
    while work:
        t = max(work, key=_term_key)
        c = work.pop(t)
        pos, mono = t
        hit = None
        for idx, (lpos, lmono) in enumerate(leads):
            if lpos == pos and _mono_divides(lmono, mono):
                hit = idx
                break
        if hit is None:
            out[t] = c
            continue
        g = basis[hit]
        shift = _mono_sub(mono, leads[hit][1])
        for (p2, m2), c2 in g.items():
            if (p2, m2) == leads[hit]:
                continue
            key = (p2, _mono_add(m2, shift))
            v = ring.csub(work.get(key, zero), ring.cmul(c, c2))
            if v:
                work[key] = v
            else:
                work.pop(key, None)
    return out


def _buchberger(elements, ring, degrees, seed=None):
    """Complete a generating set to a Groebner basis.

    seed, if given, is a list of monic elements already known to be a
    Groebner basis; only pairs involving new elements are created.
    Returns the completed list of monic elements (seed included).
    """
    basis = []
    leads = []
    supports = []
    pending = set()
    heap = []
    one = ring.coeff(1)

    def push_pairs(idx):
        pos_new, m_new = leads[idx]
        for i in range(idx):
            pos_i, m_i = leads[i]
            if pos_i != pos_new:
                continue
            if (
                supports[i] == {pos_i}
                and supports[idx] == {pos_new}
                and all(a == 0 or b == 0 for a, b in zip(m_i, m_new))
            ):
                continue  # product criterion, ideal case only
            u = _mono_lcm(m_i, m_new)
            entry = (sum(u) + degrees[pos_new], pos_new, u, i, idx)
            heapq.heappush(heap, entry)
            pending.add((i, idx))

    def add(f, with_pairs=True):
        basis.append(f)
        leads.append(_lead(f))
        supports.append({p for (p, _) in f})
        if with_pairs:
            push_pairs(len(basis) - 1)

    for f in seed or []:
        add(f, with_pairs=False)
    for f in elements:
        if not f:
            continue
        add(_make_monic(f, ring))

    steps = 0
    while heap:
        steps += 1
        assert steps < _MAX_STEPS, "Buchberger loop exceeded step bound"
        _, pos, u, i, j = heapq.heappop(heap)
        pending.discard((i, j))
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            pk, mk = leads[k]
            if pk != pos or not _mono_divides(mk, u):
                continue
            a = (i, k) if i < k else (k, i)
            b = (j, k) if j < k else (k, j)
            if a not in pending and b not in pending:
                skip = True
                break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], ring)
        if not s:
            continue
        r = _normal_form(s, basis, leads, ring)
        if r:
            add(_make_monic(r, ring))
    assert all(f[_lead(f)] == one for f in basis)
    return basis


def _reduce_basis(basis, ring):
    """Minimalize and fully interreduce a Groebner basis; canonical output."""
    if not basis:
        return []
    order = sorted(range(len(basis)), key=lambda i: _term_key(_lead(basis[i])))
    kept = []
    kept_leads = []
    for i in order:
        lt = _lead(basis[i])
        pos, mono = lt
        if any(p == pos and _mono_divides(m, mono) for (p, m) in kept_leads):
            continue
        kept.append(dict(basis[i]))
        kept_leads.append(lt)
    for idx in range(len(kept)):
        others = kept[:idx] + kept[idx + 1 :]
        leads = kept_leads[:idx] + kept_leads[idx + 1 :]
        kept[idx] = _normal_form(kept[idx], others, leads, ring)
    pairs = sorted(zip(kept_leads, kept), key=lambda t: _term_key(t[0]))
    return [f for _, f in pairs]


def _columns_to_elements(phi, offset=0):
    out = []
    for j in range(phi.source.rank):
        elem = {}
        for i in range(phi.target.rank):
            p = phi.matrix[i][j]
            for mono, c in p.terms.items():
                elem[(i + offset, mono)] = c
        out.append(elem)
    return out


def _elements_to_columns(elems, rank, ring):
    cols = []
    for f in elems:
        col = [dict() for _ in range(rank)]
        for (pos, mono), c in f.items():
            col[pos][mono] = c
        cols.append([Polynomial(ring, t, _normalized=True) for t in col])
    return cols


def _map_from_elements(elems, target, degrees, ring):
    cols = _elements_to_columns(elems, target.rank, ring)
    src_degrees = tuple(_e_degree(f, degrees) for f in elems)
    source = GradedFreeModule(ring, src_degrees)
    return GradedMap.from_columns(source, target, cols)


def groebner_basis(phi):
    """Reduced Groebner basis of the column span of phi, as a graded map
    into phi.target (deterministic: sorted by lead term)."""
    phi.validate()
    ring = phi.ring
    degrees = list(phi.target.degrees)
    elems = [f for f in _columns_to_elements(phi) if f]
    gb = _reduce_basis(_buchberger(elems, ring, degrees), ring)
    return _map_from_elements(gb, phi.target, degrees, ring)


def syzygies(phi):
    """Map onto the kernel: image of the result is exactly ker(phi)."""
    phi.validate()
    ring = phi.ring
    r = phi.target.rank
    degrees = list(phi.target.degrees) + list(phi.source.degrees)
    elems = _columns_to_elements(phi)
    for j in range(phi.source.rank):
        elems[j][(r + j, (0,) * ring.num_vars)] = ring.coeff(1)
    gb = _reduce_basis(_buchberger(elems, ring, degrees), ring)
    syz = []
    for f in gb:
        if all(pos >= r for (pos, _) in f):
            syz.append({(pos - r, mono): c for (pos, mono), c in f.items()})
    return _map_from_elements(syz, phi.source, list(phi.source.degrees), ring)


def minimal_generators(phi):
    """Prune columns to a minimal homogeneous generating set of the image.

    Columns are taken in weakly increasing degree; one is dropped exactly
    when it reduces to zero against the span of those already kept, which by
    graded Nakayama yields a minimal generating set.
    """
    phi.validate()
    ring = phi.ring
    degrees = list(phi.target.degrees)
    elems = _columns_to_elements(phi)
    order = sorted(
        (j for j in range(len(elems)) if elems[j]),
        key=lambda j: (_e_degree(elems[j], degrees), j),
    )
    kept = []
    gb = []
    for j in order:
        cand = elems[j]
        if gb:
            leads = [_lead(g) for g in gb]
            if not _normal_form(cand, gb, leads, ring):
                continue
        kept.append(cand)
        gb = _buchberger([cand], ring, degrees, seed=gb)
    return _map_from_elements(kept, phi.target, degrees, ring)
