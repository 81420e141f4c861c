"""Bitset helpers.  Subsets of a ground set are plain ints, bit i set <=> element i present."""

MAX_ELEMENTS = 256


def bits(mask):
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(items):
    if isinstance(items, int):
        if items < 0:
            raise ValueError("negative bitmask")
        return items
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def to_list(mask):
    return list(bits(mask))


def popcount(mask):
    return mask.bit_count()


def full_mask(n):
    return (1 << n) - 1


def submasks(mask):
    """All submasks of ``mask`` (including 0 and mask itself)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
