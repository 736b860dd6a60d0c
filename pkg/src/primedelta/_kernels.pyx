# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Must stay byte-identical to primedelta._pure."""

import array

from libc.stdint cimport uint8_t, uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define pd_popcount64(x) __builtin_popcountll(x)
    #else
    static int pd_popcount64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    #endif
    """
    int pd_popcount64(uint64_t x) nogil

BACKEND = "compiled"


def sieve_segment(unsigned long long low, unsigned long long high, base_primes):
    """Primality bits for n in [low, high), packed LSB first.

    Same contract as primedelta._pure.sieve_segment.
    """
    cdef uint64_t span = high - low
    cdef Py_ssize_t nbytes = <Py_ssize_t>(span >> 3)
    out = bytearray(b"\xff") * nbytes
    cdef uint8_t[::1] buf = out
    if not isinstance(base_primes, array.array):
        base_primes = array.array("Q", base_primes)
    cdef const uint64_t[::1] ps = base_primes
    cdef Py_ssize_t i
    cdef uint64_t p, start, step, m
    if low == 0:
        buf[0] &= 0xFC  # 0 and 1 are not prime
    for i in range(ps.shape[0]):
        p = ps[i]
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
        m = start - low
        while m < span:
            buf[m >> 3] &= <uint8_t>(~(1 << (m & 7)))
            m += step
    return bytes(out)


def extract_primes(bits, unsigned long long lo, unsigned long long hi):
    """List the set bit indices n with lo <= n <= hi of a packed table."""
    cdef const uint8_t[::1] b = bits
    cdef uint64_t nbits = <uint64_t>b.shape[0] << 3
    out = []
    if nbits == 0 or hi < lo:
        return out
    cdef uint64_t top = hi if hi < nbits - 1 else nbits - 1
    cdef uint64_t n = lo
    while n <= top:
        if (n & 7) == 0 and b[n >> 3] == 0:
            n += 8
            continue
        if (b[n >> 3] >> (n & 7)) & 1:
            out.append(n)
        n += 1
    return out


cdef inline uint64_t _word_at_byte(const uint8_t[::1] b, Py_ssize_t i) nogil:
    # little-endian 64-bit load starting at byte i, zero padded past the end
    cdef uint64_t w = 0
    cdef Py_ssize_t n = b.shape[0]
    cdef int j
    if i + 8 <= n:
        for j in range(8):
            w |= (<uint64_t>b[i + j]) << (8 * j)
    else:
        for j in range(8):
            if i + j < n:
                w |= (<uint64_t>b[i + j]) << (8 * j)
    return w


cdef inline uint64_t _bits_from(const uint8_t[::1] b, uint64_t pos) nogil:
    # the 64 bits pos .. pos+63 of the table, zero padded past the end
    cdef Py_ssize_t i = <Py_ssize_t>(pos >> 3)
    cdef int shift = <int>(pos & 7)
    cdef uint64_t w = _word_at_byte(b, i)
    cdef uint64_t top_byte
    if shift == 0:
        return w
    top_byte = <uint64_t>b[i + 8] if i + 8 < b.shape[0] else 0
    return (w >> shift) | (top_byte << (64 - shift))


def pair_scan(bits, unsigned long long d, unsigned long long n_max, Py_ssize_t cap):
    """Scan a packed table for q with bits q and q+d both set, q+d <= n_max.

    Returns (total count, first min(cap, count) values of q, ascending).
    Works a 64-bit word of q candidates at a time.
    """
    cdef const uint8_t[::1] b = bits
    cdef uint64_t nbits = <uint64_t>b.shape[0] << 3
    qs = []
    if nbits == 0:
        return 0, qs
    cdef uint64_t top = n_max if n_max < nbits - 1 else nbits - 1
    if d > top:
        return 0, qs
    cdef uint64_t q_max = top - d
    cdef uint64_t count = 0
    cdef Py_ssize_t kept = 0
    cdef uint64_t q0 = 0
    cdef uint64_t x, y, lsb
    while q0 <= q_max:
        x = _bits_from(b, q0) & _bits_from(b, q0 + d)
        if q_max - q0 < 63:
            x &= (<uint64_t>1 << (q_max - q0 + 1)) - 1
        if x:
            count += <uint64_t>pd_popcount64(x)
            y = x
            while y and kept < cap:
                lsb = y & (~y + 1)
                qs.append(q0 + <uint64_t>pd_popcount64(lsb - 1))
                kept += 1
                y ^= lsb
        q0 += 64
    return count, qs
