"""Pure-Python hot loops.  ``_kernels.pyx`` mirrors these signatures exactly.

Colours are passed as two int lists ``lo``/``hi`` (the transposition
``(lo[k] hi[k])`` sits on strand ``k``); letters as ``idx``/``sgn`` lists.
"""

from __future__ import annotations


def transport(idx, sgn, lo, hi):
    """Colours at the bottom of the word; returns new ``(lo, hi)`` lists."""
    lo = list(lo)
    hi = list(hi)
    for t in range(len(idx)):
        k = idx[t]
        al, ah, bl, bh = lo[k], hi[k], lo[k + 1], hi[k + 1]
        if sgn[t] > 0:
            # (a, b) -> (a b a, a)
            x = ah if bl == al else (al if bl == ah else bl)
            y = ah if bh == al else (al if bh == ah else bh)
            if x > y:
                x, y = y, x
            lo[k], hi[k] = x, y
            lo[k + 1], hi[k + 1] = al, ah
        else:
            # (a, b) -> (b, b a b)
            x = bh if al == bl else (bl if al == bh else al)
            y = bh if ah == bl else (bl if ah == bh else ah)
            if x > y:
                x, y = y, x
            lo[k], hi[k] = bl, bh
            lo[k + 1], hi[k + 1] = x, y
    return lo, hi


def liftable(idx, sgn, lo, hi):
    blo, bhi = transport(idx, sgn, lo, hi)
    return list(blo) == list(lo) and list(bhi) == list(hi)


def _step(t, l, h):
    """Edge coefficient and next sheet for one pass around a branch point coloured ``(l h)``."""
    if t == l:
        return 1, h
    if t == h:
        return -1, l
    return 0, t


def lift_free_word(word, lo, hi, start):
    """Reduced 1-chain (length ``n``) of the lift of a free-group word from sheet ``start``.

    Also returns the end sheet.  The cap relations of the branched cover
    identify both signs of a generator, so the sign of a letter is ignored.
    """
    n = len(lo)
    vec = [0] * n
    t = start
    for g, _s in word:
        c, t = _step(t, lo[g], hi[g])
        vec[g] += c
    return vec, t


def chain_matrix(idx, sgn, lo, hi):
    """Chain map (as ``n`` columns) of the word, from the bottom cover to the top cover.

    Column ``m`` is the reduced chain, in the top cover, of the lift of the
    image of ``a_m`` starting at the lesser sheet of its bottom colour.
    Returns ``(columns, bottom_lo, bottom_hi)``.
    """
    n = len(lo)
    lo = list(lo)
    hi = list(hi)
    cols = [[1 if r == c else 0 for r in range(n)] for c in range(n)]
    for t in range(len(idx)):
        k = idx[t]
        al, ah, bl, bh = lo[k], hi[k], lo[k + 1], hi[k + 1]
        ck = cols[k]
        ck1 = cols[k + 1]
        if sgn[t] > 0:
            x = ah if bl == al else (al if bl == ah else bl)
            y = ah if bh == al else (al if bh == ah else bh)
            if x > y:
                x, y = y, x
            # lift a_k a_{k+1} a_k^-1 from sheet x
            c1, s = _step(x, al, ah)
            c2, s = _step(s, bl, bh)
            c3, s = _step(s, al, ah)
            vk = c1 + c3
            vk1 = c2
            cols[k] = [vk * p + vk1 * q for p, q in zip(ck, ck1)]
            cols[k + 1] = ck
            lo[k], hi[k] = x, y
            lo[k + 1], hi[k + 1] = al, ah
        else:
            x = bh if al == bl else (bl if al == bh else al)
            y = bh if ah == bl else (bl if ah == bh else ah)
            if x > y:
                x, y = y, x
            # lift a_{k+1}^-1 a_k a_{k+1} from sheet x
            c1, s = _step(x, bl, bh)
            c2, s = _step(s, al, ah)
            c3, s = _step(s, bl, bh)
            uk = c2
            uk1 = c1 + c3
            cols[k + 1] = [uk * p + uk1 * q for p, q in zip(ck, ck1)]
            cols[k] = ck1
            lo[k], hi[k] = bl, bh
            lo[k + 1], hi[k + 1] = x, y
    return cols, lo, hi
