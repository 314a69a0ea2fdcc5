"""Pure-Python GF(2^8) kernels.

Field: polynomials over GF(2) reduced by x^8 + x^4 + x^3 + x + 1 (0x11B).
Addition is XOR. Multiplication goes through log/antilog tables built from
the generator 0x03, whose powers cover all 255 nonzero elements.

The compiled backend (``_gf256_cy``) mirrors this module function-for-
function; callers import whichever the package selected and never notice
the difference beyond speed.
"""

BACKEND = "pure-python"


def _build_tables():
    exp = [0] * 510
    log = [0] * 256
    x = 1
    for i in range(255):
        exp[i] = x
        log[x] = i
        # multiply by the generator 0x03: x*3 = x ^ (x<<1), reduced mod 0x11B
        x ^= x << 1
        if x & 0x100:
            x ^= 0x11B
    # duplicate so exp[log a + log b] never needs a modular reduction
    for i in range(255, 510):
        exp[i] = exp[i - 255]
    return exp, log


_EXP, _LOG = _build_tables()


def gf_mul(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return _EXP[_LOG[a] + _LOG[b]]


def gf_inv(a: int) -> int:
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative inverse in GF(256)")
    return _EXP[255 - _LOG[a]]


def eval_shares(coeffs: bytes, k: int, length: int, indices: bytes) -> list[bytes]:
    """Evaluate per-byte polynomials at every index.

    ``coeffs`` holds ``length`` rows of ``k`` bytes each (row-major); row
    ``p`` is the polynomial for byte position ``p``, constant term first.
    Returns one payload of ``length`` bytes per index.
    """
    exp, log = _EXP, _LOG
    out = []
    for x in indices:
        payload = bytearray(length)
        if x == 0:
            raise ValueError("evaluation index 0 would leak the secret")
        lx = log[x]
        for pos in range(length):
            base = pos * k
            acc = 0
            for ci in range(k - 1, -1, -1):
                if acc:
                    acc = exp[log[acc] + lx]
                acc ^= coeffs[base + ci]
            payload[pos] = acc
        out.append(bytes(payload))
    return out


def lagrange_weights(indices: bytes, x: int) -> bytes:
    """Lagrange basis values l_i(x) for distinct evaluation points.

    A share payload interpolated at ``x`` is then just the weighted
    XOR-sum of the payloads; x=0 recovers the constant term.
    """
    exp, log = _EXP, _LOG
    k = len(indices)
    weights = bytearray(k)
    for i in range(k):
        xi = indices[i]
        w = 1
        for j in range(k):
            if j == i:
                continue
            num = x ^ indices[j]
            den = xi ^ indices[j]
            if den == 0:
                raise ValueError("duplicate evaluation point")
            if num == 0:
                w = 0
                break
            # w *= num / den; the +255 keeps the exp index non-negative
            w = gf_mul(w, exp[log[num] + 255 - log[den]])
        weights[i] = w
    return bytes(weights)


def weighted_sum(weights: bytes, payloads: list[bytes], length: int) -> bytes:
    """XOR-accumulate w_i * payload_i bytewise; the hot reconstruction loop."""
    exp, log = _EXP, _LOG
    out = bytearray(length)
    for w, payload in zip(weights, payloads):
        if w == 0:
            continue
        lw = log[w]
        for pos in range(length):
            y = payload[pos]
            if y:
                out[pos] ^= exp[lw + log[y]]
    return bytes(out)
