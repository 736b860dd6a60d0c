"""Pure-Python kernels: fallback for the compiled extension.

The three functions here mirror primedelta._kernels bit for bit; tests
assert byte-identical output. Inner loops lean on C-level bytearray slice
assignment and big-integer bit tricks instead of per-element Python loops.
"""

BACKEND = "pure"

# bit positions set in each byte value, LSB first
_BIT_POSITIONS = tuple(
    tuple(j for j in range(8) if value >> j & 1) for value in range(256)
)

# byte 0x01 -> the single bit (1 << j); used to pack a 0/1 byte mask into bits
_PACK_TABLES = tuple(
    bytes((1 << j) if value == 1 else 0 for value in range(256)) for j in range(8)
)


def sieve_segment(low, high, base_primes):
    """Primality bits for n in [low, high), packed LSB first.

    low and high must be multiples of 8; base_primes must contain every
    prime p with p*p < high, in increasing order. Returns (high-low)//8
    bytes where bit i of byte b is set iff low + 8*b + i is prime.
    """
    span = high - low
    mask = bytearray(b"\x01") * span
    if low == 0:
        mask[0] = 0
        mask[1] = 0
    for p in base_primes:
        if p * p >= high:
            break
        if p == 2:
            start = low if low > 4 else 4
            step = 2
        else:
            start = p * p
            if start < low:
                start = ((low + p - 1) // p) * p
            if start % 2 == 0:
                start += p  # even multiples are already struck via p = 2
            step = 2 * p
        if start >= high:
            continue
        first = start - low
        mask[first::step] = bytes(len(range(first, span, step)))
    packed = 0
    for j in range(8):
        packed |= int.from_bytes(mask[j::8].translate(_PACK_TABLES[j]), "little")
    return packed.to_bytes(span >> 3, "little")


def extract_primes(bits, lo, hi):
    """List the set bit indices n with lo <= n <= hi of a packed table."""
    if hi < lo or not bits:
        return []
    out = []
    append = out.append
    first = lo >> 3
    last = min(hi >> 3, len(bits) - 1)
    positions = _BIT_POSITIONS
    for i in range(first, last + 1):
        value = bits[i]
        if not value:
            continue
        base = i << 3
        if i == first or i == last:
            for j in positions[value]:
                n = base + j
                if lo <= n <= hi:
                    append(n)
        else:
            for j in positions[value]:
                append(base + j)
    return out


def pair_scan(bits, d, n_max, cap):
    """Scan a packed table for q with bits q and q+d both set, q+d <= n_max.

    Returns (total count, first min(cap, count) values of q, ascending).
    Implemented as one shifted AND on the table viewed as a big integer.
    """
    table = int.from_bytes(bits, "little")
    if n_max + 1 < len(bits) << 3:
        table &= (1 << (n_max + 1)) - 1
    hits = table & (table >> d)
    count = hits.bit_count()
    qs = []
    if cap > 0 and hits:
        need = count if count < cap else cap
        data = hits.to_bytes((hits.bit_length() + 7) >> 3, "little")
        append = qs.append
        for i, value in enumerate(data):
            if not value:
                continue
            base = i << 3
            for j in _BIT_POSITIONS[value]:
                append(base + j)
                if len(qs) == need:
                    return count, qs
    return count, qs
