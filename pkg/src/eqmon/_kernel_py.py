"""Pure-Python enumeration kernel.

Same contract as the compiled module eqmon._kernel; eqmon.kernel picks one at
import time.  All functions work on flat integer encodings:

- a monoid is a flat n*n multiplication table ``table[a*n + b]`` plus the
  index ``e`` of its identity element;
- a word is a sequence of letter codes in ``range(k)`` for substitution
  enumeration, or arbitrary integer symbols for pattern matching;
- a substitution over k letters is ranked lexicographically: letter 0 is the
  most significant digit, so rank ``s`` assigns letter i the element
  ``(s // n**(k-1-i)) % n``.
"""

from array import array

BACKEND = "python"


def _first_positions(word, k):
    # fp[d] = first position whose letter code is >= d (len(word) if none)
    fp = [len(word)] * k
    for i in range(len(word) - 1, -1, -1):
        c = word[i]
        for d in range(c + 1):
            if i < fp[d]:
                fp[d] = i
    return fp


def check_identity(table, n, e, lhs, rhs, k):
    """First substitution rank where the two words evaluate differently, or -1.

    Enumerates all n**k substitutions; the caller is responsible for checking
    that against its budget beforehand.  Prefix products are reused across
    consecutive substitutions: an odometer step that changes digit d only
    recomputes word positions from the first letter with code >= d.
    """
    ll, lr = list(lhs), list(rhs)
    if k == 0:
        if ll or lr:
            raise ValueError("nonempty word with no letters")
        return -1
    img = [0] * k
    fl = _first_positions(ll, k)
    fr = _first_positions(lr, k)
    pl = [e] * (len(ll) + 1)
    pr = [e] * (len(lr) + 1)

    def recompute(word, pref, frm):
        acc = pref[frm]
        for i in range(frm, len(word)):
            acc = table[acc * n + img[word[i]]]
            pref[i + 1] = acc

    recompute(ll, pl, 0)
    recompute(lr, pr, 0)
    total = n**k
    s = 0
    while True:
        if pl[len(ll)] != pr[len(lr)]:
            return s
        s += 1
        if s == total:
            return -1
        d = k - 1
        while img[d] == n - 1:
            img[d] = 0
            d -= 1
        img[d] += 1
        recompute(ll, pl, fl[d])
        recompute(lr, pr, fr[d])


def eval_subs_range(table, n, e, word, k, start, stop):
    """Values of the word under substitution ranks [start, stop), as array('i')."""
    if stop <= start:
        return array("i")
    w = list(word)
    out = array("i", [0]) * (stop - start)
    if k == 0:
        for i in range(stop - start):
            out[i] = e
        return out
    img = [0] * k
    rem = start
    for i in range(k - 1, -1, -1):
        img[i] = rem % n
        rem //= n
    fp = _first_positions(w, k)
    pref = [e] * (len(w) + 1)

    def recompute(frm):
        acc = pref[frm]
        for i in range(frm, len(w)):
            acc = table[acc * n + img[w[i]]]
            pref[i + 1] = acc

    recompute(0)
    for idx in range(stop - start):
        out[idx] = pref[len(w)]
        if idx + 1 == stop - start:
            break
        d = k - 1
        while img[d] == n - 1:
            img[d] = 0
            d -= 1
        img[d] += 1
        recompute(fp[d])
    return out


def eval_under_subs(table, n, e, word, k, subs_flat):
    """Values of the word under explicitly listed substitutions (num x k, flattened)."""
    w = list(word)
    num = len(subs_flat) // k if k else 0
    if k == 0:
        return array("i", [e])
    out = array("i", [0]) * num
    for row in range(num):
        base = row * k
        acc = e
        for c in w:
            acc = table[acc * n + subs_flat[base + c]]
        out[row] = acc
    return out


def enumerate_matches(pattern, target, nvars):
    """All assignments of target spans to pattern variables spelling the target.

    pattern entries are variable codes in range(nvars); target entries are
    arbitrary integer symbols.  Each match is an array('i') of 2*nvars span
    bounds [s0, e0, s1, e1, ...]; variable v's image is target[s_v:e_v]
    (possibly empty).  Matches come out in depth-first order with shorter
    images tried first, which is a stable enumeration order.
    """
    pat = list(pattern)
    tgt = list(target)
    plen, tlen = len(pat), len(tgt)
    # occ_tail[i][v] = occurrences of v in pat[i:], for the length lower bound
    occ_tail = [[0] * nvars for _ in range(plen + 1)]
    for i in range(plen - 1, -1, -1):
        row = occ_tail[i + 1][:]
        row[pat[i]] += 1
        occ_tail[i] = row
    spans = [-1] * (2 * nvars)
    lengths = [0] * nvars
    out = []

    def lower_bound(i):
        tail = occ_tail[i]
        need = 0
        for v in range(nvars):
            c = tail[v]
            if c and spans[2 * v] >= 0:
                need += c * lengths[v]
        return need

    def dfs(i, j):
        if i == plen:
            if j == tlen:
                out.append(array("i", spans))
            return
        v = pat[i]
        s0 = spans[2 * v]
        if s0 >= 0:
            ln = lengths[v]
            if j + ln <= tlen and tgt[j : j + ln] == tgt[s0 : s0 + ln]:
                if lower_bound(i + 1) <= tlen - j - ln:
                    dfs(i + 1, j + ln)
            return
        occ = occ_tail[i][v]
        slack = tlen - j - lower_bound(i + 1)
        if slack < 0:
            return
        max_len = slack // occ
        for ln in range(max_len + 1):
            spans[2 * v] = j
            spans[2 * v + 1] = j + ln
            lengths[v] = ln
            dfs(i + 1, j + ln)
        spans[2 * v] = -1
        spans[2 * v + 1] = -1
        lengths[v] = 0

    if lower_bound(0) <= tlen:
        dfs(0, 0)
    return out
