"""Pure-Python backend for Laurent-polynomial arithmetic.

A polynomial in q and z with integer coefficients is a plain dict
``{(qexp, zexp): coeff}`` with every stored coeff nonzero; the empty
dict is zero.  Exponents may be negative.  All functions return fresh
dicts and never mutate their arguments.
"""


def pzero():
    return {}


def pconst(c):
    return {(0, 0): c} if c else {}


def pmono(c, qe, ze):
    return {(qe, ze): c} if c else {}


def pis_zero(a):
    return not a


def pis_monomial(a):
    return len(a) == 1


def peq(a, b):
    return a == b


def padd(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pneg(a):
    return {k: -c for k, c in a.items()}


def psub(a, b):
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pscale(a, c):
    if not c:
        return {}
    return {k: v * c for k, v in a.items()}


def pshift(a, qe, ze):
    if not qe and not ze:
        return dict(a)
    return {(k[0] + qe, k[1] + ze): v for k, v in a.items()}


def pmul(a, b):
    if not a or not b:
        return {}
    if len(b) == 1:
        ((qe, ze), c) = next(iter(b.items()))
        return {(k[0] + qe, k[1] + ze): v * c for k, v in a.items()}
    if len(a) == 1:
        ((qe, ze), c) = next(iter(a.items()))
        return {(k[0] + qe, k[1] + ze): v * c for k, v in b.items()}
    out = {}
    for (qa, za), ca in a.items():
        for (qb, zb), cb in b.items():
            k = (qa + qb, za + zb)
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def ppow(a, n):
    if n < 0:
        raise ValueError("negative power")
    out = {(0, 0): 1}
    base = dict(a)
    while n:
        if n & 1:
            out = pmul(out, base)
        n >>= 1
        if n:
            base = pmul(base, base)
    return out


def pcontent(a):
    """Positive gcd of all coefficients; 0 for the zero polynomial."""
    g = 0
    for c in a.values():
        c = -c if c < 0 else c
        while c:
            g, c = c, g % c
        if g == 1:
            return 1
    return g


def pdivexact_int(a, c):
    out = {}
    for k, v in a.items():
        d, r = divmod(v, c)
        if r:
            raise ValueError("inexact integer division")
        out[k] = d
    return out


def pdivexact_mono(a, c, qe, ze):
    """Divide by the monomial c*q^qe*z^ze; every coeff must divide."""
    out = {}
    for k, v in a.items():
        d, r = divmod(v, c)
        if r:
            raise ValueError("inexact monomial division")
        out[(k[0] - qe, k[1] - ze)] = d
    return out


def pminexp(a):
    """Componentwise minimum of exponents; (0, 0) for the zero poly."""
    if not a:
        return (0, 0)
    qm = min(k[0] for k in a)
    zm = min(k[1] for k in a)
    return (qm, zm)


# -- gcd support ---------------------------------------------------------
# Univariate helpers work on dicts {exp: coeff} over the integers; the
# bivariate layer views a polynomial as a list over z-degree with q-poly
# coefficients and runs a primitive remainder sequence.


def _igcd(x, y):
    x = -x if x < 0 else x
    y = -y if y < 0 else y
    while y:
        x, y = y, x % y
    return x


def _qcontent(f):
    g = 0
    for c in f.values():
        g = _igcd(g, c)
        if g == 1:
            return 1
    return g


def _qprim(f):
    """Primitive part with positive leading coefficient."""
    if not f:
        return {}
    g = _qcontent(f)
    if f[max(f)] < 0:
        g = -g
    if g == 1:
        return dict(f)
    return {k: v // g for k, v in f.items()}


def _qabs(f):
    """Copy with positive leading coefficient, content kept."""
    if not f or f[max(f)] > 0:
        return dict(f)
    return {k: -v for k, v in f.items()}


def _qpseudo_rem(f, g):
    dg = max(g)
    lg = g[dg]
    r = dict(f)
    while r:
        dr = max(r)
        if dr < dg:
            break
        lr = r[dr]
        nxt = {}
        for k, v in r.items():
            if k != dr:
                nxt[k] = v * lg
        for k, v in g.items():
            if k != dg:
                kk = k + dr - dg
                s = nxt.get(kk, 0) - v * lr
                if s:
                    nxt[kk] = s
                else:
                    nxt.pop(kk, None)
        r = nxt
    return r


def _qgcd(f, g):
    if not f:
        return _qabs(g)
    if not g:
        return _qabs(f)
    c = _igcd(_qcontent(f), _qcontent(g))
    f = _qprim(f)
    g = _qprim(g)
    while g:
        r = _qpseudo_rem(f, g)
        f, g = g, _qprim(r)
    if c != 1:
        f = {k: v * c for k, v in f.items()}
    return f


def _qdivexact(f, g):
    """Exact division in Z[x]; raises ValueError when inexact."""
    if not g:
        raise ZeroDivisionError("zero divisor")
    if not f:
        return {}
    dg = max(g)
    lg = g[dg]
    r = dict(f)
    out = {}
    while r:
        dr = max(r)
        if dr < dg:
            raise ValueError("inexact division")
        t, rem = divmod(r[dr], lg)
        if rem:
            raise ValueError("inexact division")
        out[dr - dg] = t
        for k, v in g.items():
            kk = k + dr - dg
            s = r.get(kk, 0) - v * t
            if s:
                r[kk] = s
            else:
                r.pop(kk, None)
    return out


def _split_z(a):
    """Dict form (min exponents (0, 0)) to a z-degree list of q-polys."""
    zmax = max(k[1] for k in a)
    out = [dict() for _ in range(zmax + 1)]
    for (qe, ze), c in a.items():
        out[ze][qe] = c
    return out


def _join_z(L):
    out = {}
    for ze, f in enumerate(L):
        for qe, c in f.items():
            out[(qe, ze)] = c
    return out


def _ztrim(F):
    while F and not F[-1]:
        F.pop()
    return F


def _zcontent(F):
    g = {}
    for f in F:
        g = _qgcd(g, f)
        if g == {0: 1}:
            return g
    return g


def _zprim(F):
    g = _zcontent(F)
    if g == {0: 1}:
        return [dict(f) for f in F]
    return [_qdivexact(f, g) if f else {} for f in F]


def _zpseudo_rem(F, G):
    dg = len(G) - 1
    lg = G[dg]
    r = _ztrim([dict(f) for f in F])
    while r and len(r) - 1 >= dg:
        dr = len(r) - 1
        lr = r[dr]
        # lg*r - lr*x^(dr-dg)*G; the top terms cancel by construction
        nxt = [_qmul(r[i], lg) if r[i] else {} for i in range(dr)]
        for i in range(dg):
            if G[i]:
                j = i + dr - dg
                nxt[j] = _qsub(nxt[j], _qmul(G[i], lr))
        r = _ztrim(nxt)
    return r


def _qmul(f, g):
    if not f or not g:
        return {}
    out = {}
    for a, ca in f.items():
        for b, cb in g.items():
            k = a + b
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return out


def _qsub(f, g):
    out = dict(f)
    for k, v in g.items():
        s = out.get(k, 0) - v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def _zgcd(F, G):
    F = _ztrim([dict(f) for f in F])
    G = _ztrim([dict(f) for f in G])
    if not F:
        return G
    if not G:
        return F
    c = _qgcd(_zcontent(F), _zcontent(G))
    F = _zprim(F)
    G = _zprim(G)
    if len(F) < len(G):
        F, G = G, F
    while G:
        R = _zpseudo_rem(F, G)
        F, G = G, (_zprim(R) if R else [])
    if c != {0: 1}:
        F = [_qmul(f, c) if f else {} for f in F]
    return F


def _zdivexact(F, G):
    F = _ztrim([dict(f) for f in F])
    G = _ztrim([dict(f) for f in G])
    if not G:
        raise ZeroDivisionError("zero divisor")
    if not F:
        return []
    dg = len(G) - 1
    lg = G[dg]
    out = [dict() for _ in range(len(F) - dg)]
    r = F
    while True:
        _ztrim(r)
        if not r:
            break
        dr = len(r) - 1
        if dr < dg:
            raise ValueError("inexact division")
        t = _qdivexact(r[dr], lg)
        out[dr - dg] = t
        for i in range(dg + 1):
            if G[i]:
                r[i + dr - dg] = _qsub(r[i + dr - dg], _qmul(G[i], t))
    return out


def pgcd(a, b):
    """A gcd of two Laurent polynomials, up to a monomial unit.

    The result has minimal exponents (0, 0) and positive content; for a
    zero argument the other is returned (shifted likewise). Monomials
    are units here, so callers reduce fractions with it rather than
    compare it against a unique normal form.
    """
    if not a:
        if not b:
            return {}
        qm, zm = pminexp(b)
        return pshift(b, -qm, -zm)
    if not b:
        qm, zm = pminexp(a)
        return pshift(a, -qm, -zm)
    qa, za = pminexp(a)
    qb, zb = pminexp(b)
    F = _split_z(pshift(a, -qa, -za))
    G = _split_z(pshift(b, -qb, -zb))
    H = _zgcd(F, G)
    out = _join_z(H)
    # pull out any residual monomial unit
    qm, zm = pminexp(out)
    if qm or zm:
        out = pshift(out, -qm, -zm)
    if out[max(out)] < 0:
        out = {k: -v for k, v in out.items()}
    return out


def pdivexact(a, b):
    """Exact division of Laurent polynomials; raises ValueError if inexact."""
    if not b:
        raise ZeroDivisionError("zero divisor")
    if not a:
        return {}
    qa, za = pminexp(a)
    qb, zb = pminexp(b)
    F = _split_z(pshift(a, -qa, -za))
    G = _split_z(pshift(b, -qb, -zb))
    Q = _zdivexact(F, G)
    return pshift(_join_z(Q), qa - qb, za - zb)
