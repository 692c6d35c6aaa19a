#!/usr/bin/env python3
"""Regenerates the bundled b-files from each sequence's definition.

Run from this directory: python3 generate.py
"""
from math import comb, factorial, isqrt


def a005408(n):  # odd numbers, offset 0
    return 2 * n + 1


def a000290(n):  # squares, offset 0
    return n * n


def a000330(n):  # square pyramidal numbers, offset 0
    return n * (n + 1) * (2 * n + 1) // 6


def a002415(n):  # 4-dimensional pyramidal numbers, offset 0
    return n * n * (n * n - 1) // 12


def a005585(n):  # 5-dimensional pyramidal numbers, offset 0
    return comb(n + 4, 4) * (2 * n + 5) // 5


def a000108(n):  # Catalan numbers, offset 0
    return comb(2 * n, n) // (n + 1)


def a014963(n):  # exp(Lambda(n)), offset 1
    if n == 1:
        return 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else 1
        p += 1
    return n


def a182411_terms(rows):  # (2k)!(2n)!/(k! n! (n+k)!), triangle by rows, offset 0
    out = []
    for n in range(rows):
        for k in range(n + 1):
            out.append(factorial(2 * k) * factorial(2 * n) // (factorial(k) * factorial(n) * factorial(n + k)))
    return out


def write(number, offset, terms):
    with open(f"b{number:06d}.txt", "w") as f:
        for i, t in enumerate(terms):
            f.write(f"{offset + i} {t}\n")


write(5408, 0, [a005408(n) for n in range(1000)])
write(290, 0, [a000290(n) for n in range(1000)])
write(330, 0, [a000330(n) for n in range(1000)])
write(2415, 0, [a002415(n) for n in range(1000)])
write(5585, 0, [a005585(n) for n in range(1000)])
write(108, 0, [a000108(n) for n in range(300)])
write(14963, 1, [a014963(n) for n in range(1, 1001)])
write(182411, 0, a182411_terms(40))
