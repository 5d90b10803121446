"""Regenerate src/asymset/_field_table.py.

Finds, for every degree w in [2, MAX_DEGREE], the numerically smallest
primitive polynomial over GF(2), and records the prime factorization of
2^w - 1 used for primitivity checks and discrete logarithms.
"""
import sympy

MAX_DEGREE = 127


def x_pow_mod(e, mod, w):
    result, base = 1, 2
    while e:
        if e & 1:
            result = mulmod(result, base, mod, w)
        base = mulmod(base, base, mod, w)
        e >>= 1
    return result


def mulmod(a, b, mod, w):
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> w:
            a ^= mod
    return r


def is_primitive(mod, w, factors):
    order = (1 << w) - 1
    if x_pow_mod(order, mod, w) != 1:
        return False
    return all(x_pow_mod(order // q, mod, w) != 1 for q in factors)


def main():
    rows = []
    for w in range(2, MAX_DEGREE + 1):
        factors = sorted(sympy.factorint((1 << w) - 1))
        mod = next(m for m in range((1 << w) + 1, 1 << (w + 1), 2)
                   if is_primitive(m, w, factors))
        rows.append((w, mod, factors))
    out = ['"""Generated by tools/gen_field_table.py; do not edit."""', "",
           "# degree -> smallest primitive modulus (bit w set)", "PRIMITIVE_MODULI = {"]
    out += [f"    {w}: {hex(mod)}," for w, mod, _ in rows]
    out += ["}", "", "# degree -> distinct prime factors of 2^w - 1", "ORDER_FACTORS = {"]
    out += [f"    {w}: ({', '.join(str(q) for q in f)},)," for w, _, f in rows]
    out += ["}", ""]
    print("\n".join(out))


if __name__ == "__main__":
    main()
