# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernel; the contract is documented in eqmon._kernel_py.

Both backends must enumerate in exactly the same order so that witnesses and
match lists are byte-identical whichever one is loaded.
"""

from cpython cimport array as carr

import array as pyarray

BACKEND = "c"

cdef carr.array _INT_TEMPLATE = pyarray.array("i", [])


cdef carr.array _as_int_array(obj):
    if isinstance(obj, pyarray.array) and (<carr.array> obj).ob_descr.typecode == c'i':
        return <carr.array> obj
    return pyarray.array("i", obj)


cdef inline void _first_positions(const int[::1] word, int k, int[::1] fp) noexcept:
    cdef Py_ssize_t i
    cdef int c, d
    for d in range(k):
        fp[d] = <int> word.shape[0]
    for i in range(word.shape[0] - 1, -1, -1):
        c = word[i]
        for d in range(c + 1):
            if i < fp[d]:
                fp[d] = <int> i
    return


cdef inline void _recompute(const int[::1] tab, int n, const int[::1] word,
                            int[::1] pref, const int[::1] img, int frm) noexcept:
    cdef Py_ssize_t i
    cdef int acc = pref[frm]
    for i in range(frm, word.shape[0]):
        acc = tab[acc * n + img[word[i]]]
        pref[i + 1] = acc
    return


def check_identity(table, int n, int e, lhs, rhs, int k):
    """First substitution rank where the two words evaluate differently, or -1."""
    cdef carr.array tab_a = _as_int_array(table)
    cdef carr.array lhs_a = _as_int_array(lhs)
    cdef carr.array rhs_a = _as_int_array(rhs)
    if k == 0:
        if len(lhs_a) or len(rhs_a):
            raise ValueError("nonempty word with no letters")
        return -1
    cdef const int[::1] tab = tab_a
    cdef const int[::1] wl = lhs_a
    cdef const int[::1] wr = rhs_a
    cdef carr.array img_a = carr.clone(_INT_TEMPLATE, k, True)
    cdef carr.array fl_a = carr.clone(_INT_TEMPLATE, k, False)
    cdef carr.array fr_a = carr.clone(_INT_TEMPLATE, k, False)
    cdef carr.array pl_a = carr.clone(_INT_TEMPLATE, wl.shape[0] + 1, False)
    cdef carr.array pr_a = carr.clone(_INT_TEMPLATE, wr.shape[0] + 1, False)
    cdef int[::1] img = img_a
    cdef int[::1] fl = fl_a
    cdef int[::1] fr = fr_a
    cdef int[::1] pl = pl_a
    cdef int[::1] pr = pr_a
    cdef Py_ssize_t i
    cdef int d
    _first_positions(wl, k, fl)
    _first_positions(wr, k, fr)
    for i in range(wl.shape[0] + 1):
        pl[i] = e
    for i in range(wr.shape[0] + 1):
        pr[i] = e
    _recompute(tab, n, wl, pl, img, 0)
    _recompute(tab, n, wr, pr, img, 0)
    cdef long long total = 1
    for d in range(k):
        total *= n
    cdef long long s = 0
    while True:
        if pl[wl.shape[0]] != pr[wr.shape[0]]:
            return s
        s += 1
        if s == total:
            return -1
        d = k - 1
        while img[d] == n - 1:
            img[d] = 0
            d -= 1
        img[d] += 1
        _recompute(tab, n, wl, pl, img, fl[d])
        _recompute(tab, n, wr, pr, img, fr[d])


def eval_subs_range(table, int n, int e, word, int k, long long start, long long stop):
    """Values of the word under substitution ranks [start, stop), as array('i')."""
    if stop <= start:
        return pyarray.array("i")
    cdef carr.array tab_a = _as_int_array(table)
    cdef carr.array word_a = _as_int_array(word)
    cdef Py_ssize_t cnt = <Py_ssize_t> (stop - start)
    cdef carr.array out_a = carr.clone(_INT_TEMPLATE, cnt, True)
    cdef int[::1] out = out_a
    cdef Py_ssize_t idx
    if k == 0:
        for idx in range(cnt):
            out[idx] = e
        return out_a
    cdef const int[::1] tab = tab_a
    cdef const int[::1] w = word_a
    cdef carr.array img_a = carr.clone(_INT_TEMPLATE, k, True)
    cdef carr.array fp_a = carr.clone(_INT_TEMPLATE, k, False)
    cdef carr.array pref_a = carr.clone(_INT_TEMPLATE, w.shape[0] + 1, False)
    cdef int[::1] img = img_a
    cdef int[::1] fp = fp_a
    cdef int[::1] pref = pref_a
    cdef Py_ssize_t i
    cdef int d
    cdef long long rem = start
    for d in range(k - 1, -1, -1):
        img[d] = <int> (rem % n)
        rem //= n
    _first_positions(w, k, fp)
    for i in range(w.shape[0] + 1):
        pref[i] = e
    _recompute(tab, n, w, pref, img, 0)
    for idx in range(cnt):
        out[idx] = pref[w.shape[0]]
        if idx + 1 == cnt:
            break
        d = k - 1
        while img[d] == n - 1:
            img[d] = 0
            d -= 1
        img[d] += 1
        _recompute(tab, n, w, pref, img, fp[d])
    return out_a


def eval_under_subs(table, int n, int e, word, int k, subs_flat):
    """Values of the word under explicitly listed substitutions (num x k, flattened)."""
    cdef carr.array tab_a = _as_int_array(table)
    cdef carr.array word_a = _as_int_array(word)
    if k == 0:
        return pyarray.array("i", [e])
    cdef carr.array subs_a = _as_int_array(subs_flat)
    cdef const int[::1] tab = tab_a
    cdef const int[::1] w = word_a
    cdef const int[::1] subs = subs_a
    cdef Py_ssize_t num = subs.shape[0] // k
    cdef carr.array out_a = carr.clone(_INT_TEMPLATE, num, True)
    cdef int[::1] out = out_a
    cdef Py_ssize_t row, i, base
    cdef int acc
    for row in range(num):
        base = row * k
        acc = e
        for i in range(w.shape[0]):
            acc = tab[acc * n + subs[base + w[i]]]
        out[row] = acc
    return out_a


cdef inline int _lower_bound(const int[::1] occ_tail, int nvars,
                             const int[::1] spans, const int[::1] lengths,
                             int i) noexcept:
    cdef int v, need = 0
    for v in range(nvars):
        if occ_tail[i * nvars + v] and spans[2 * v] >= 0:
            need += occ_tail[i * nvars + v] * lengths[v]
    return need


cdef void _match_dfs(const int[::1] pat, int plen, const int[::1] tgt, int tlen,
                     int nvars, const int[::1] occ_tail, int[::1] spans,
                     int[::1] lengths, int i, int j, list out):
    cdef int v, s0, ln, occ, slack, max_len, t, need
    if i == plen:
        if j == tlen:
            out.append(pyarray.array("i", [spans[t] for t in range(2 * nvars)]))
        return
    v = pat[i]
    s0 = spans[2 * v]
    if s0 >= 0:
        ln = lengths[v]
        if j + ln <= tlen:
            for t in range(ln):
                if tgt[j + t] != tgt[s0 + t]:
                    return
            need = _lower_bound(occ_tail, nvars, spans, lengths, i + 1)
            if need <= tlen - j - ln:
                _match_dfs(pat, plen, tgt, tlen, nvars, occ_tail, spans, lengths,
                           i + 1, j + ln, out)
        return
    occ = occ_tail[i * nvars + v]
    need = _lower_bound(occ_tail, nvars, spans, lengths, i + 1)
    slack = tlen - j - need
    if slack < 0:
        return
    max_len = slack // occ
    for ln in range(max_len + 1):
        spans[2 * v] = j
        spans[2 * v + 1] = j + ln
        lengths[v] = ln
        _match_dfs(pat, plen, tgt, tlen, nvars, occ_tail, spans, lengths,
                   i + 1, j + ln, out)
    spans[2 * v] = -1
    spans[2 * v + 1] = -1
    lengths[v] = 0
    return


def enumerate_matches(pattern, target, int nvars):
    """All span assignments making the variable pattern spell the target word."""
    cdef carr.array pat_a = _as_int_array(pattern)
    cdef carr.array tgt_a = _as_int_array(target)
    cdef const int[::1] pat = pat_a
    cdef const int[::1] tgt = tgt_a
    cdef int plen = <int> pat.shape[0]
    cdef int tlen = <int> tgt.shape[0]
    cdef int size = (plen + 1) * nvars if nvars else plen + 1
    cdef carr.array occ_a = carr.clone(_INT_TEMPLATE, size, True)
    cdef int[::1] occ_tail = occ_a
    cdef int i, v
    if nvars:
        for i in range(plen - 1, -1, -1):
            for v in range(nvars):
                occ_tail[i * nvars + v] = occ_tail[(i + 1) * nvars + v]
            occ_tail[i * nvars + pat[i]] += 1
    cdef carr.array spans_a = carr.clone(_INT_TEMPLATE, 2 * nvars if nvars else 1, False)
    cdef carr.array lens_a = carr.clone(_INT_TEMPLATE, nvars if nvars else 1, True)
    cdef int[::1] spans = spans_a
    cdef int[::1] lengths = lens_a
    for i in range(2 * nvars):
        spans[i] = -1
    out = []
    if _lower_bound(occ_tail, nvars, spans, lengths, 0) <= tlen:
        _match_dfs(pat, plen, tgt, tlen, nvars, occ_tail, spans, lengths, 0, 0, out)
    return out
