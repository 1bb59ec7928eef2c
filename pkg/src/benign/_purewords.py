"""Pure-Python word kernels.

Letters are nonzero integers; ``-x`` is the inverse of ``x``.  A word is
freely reduced when no two adjacent letters cancel.  These functions are the
reference implementation; ``benign._fastwords`` is the compiled twin with the
same signatures and semantics.
"""


def free_reduce(letters):
    """Cancel adjacent inverse pairs; returns a reduced tuple."""
    out = []
    push = out.append
    pop = out.pop
    for x in letters:
        if out and out[-1] == -x:
            pop()
        else:
            push(x)
    return tuple(out)


def invert(letters):
    return tuple(-x for x in reversed(letters))


def concat_reduce(*parts):
    """Reduce the concatenation of already-reduced (or raw) letter runs."""
    out = []
    push = out.append
    pop = out.pop
    for part in parts:
        for x in part:
            if out and out[-1] == -x:
                pop()
            else:
                push(x)
    return tuple(out)


def concat_reduce_many(parts):
    return concat_reduce(*parts)


def conjugate(letters, by):
    """u^-1 w u for w=letters, u=by."""
    return concat_reduce(invert(by), letters, by)


def power(letters, n):
    if n == 0:
        return ()
    if n < 0:
        letters = invert(letters)
        n = -n
    return concat_reduce(*([letters] * n))
