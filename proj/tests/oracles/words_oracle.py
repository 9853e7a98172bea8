"""Brute-force oracle for word reduction, mixed identities and group exponents."""
import math
from functools import reduce as fold

import numpy as np


def free_reduce(letters):
    # letters: list of (gen, +-1); cancel adjacent inverse pairs until stable
    changed = True
    w = list(letters)
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i][0] == w[i + 1][0] and w[i][1] == -w[i + 1][1]:
                del w[i:i + 2]
                changed = True
                break
    return w


def inv(w):
    return [(g, -e) for g, e in reversed(w)]


def comm(a, b):
    return free_reduce(a + b + inv(a) + inv(b))


x = [("x", 1)]
y = [("y", 1)]
w2 = comm(x, y + x + inv(y))
print("[x, y x y^-1] =", " ".join(g if e > 0 else g + "^-1" for g, e in w2), "letters", len(w2))


def power(w, n):
    return sum([w] * n, []) if n >= 0 else sum([inv(w)] * (-n), [])


def witness(constraints, candidates):
    for idx, g in enumerate(candidates):
        word = []
        for s, e in constraints:
            word += s + power(g, e)
        if free_reduce(word):
            return idx
    return None


cons = [(x, 1), (inv(x), 1)]
cands = [[], [], y, power(y, 2)]
print("witness for x g x^-1 g over [1, 1, y, y^2]:", witness(cons, cands))
cons2 = [(x, 1), (y, -1)]
cands2 = [power(y, n) for n in range(1, 5)]
print("witness for x g y g^-1 over y^n:", witness(cons2, cands2))
cons3 = [(y, 2), (inv(y), -2)]  # y g^2 y^-1 g^-2 vanishes for g = y^n
cands3 = [power(y, 1), power(y, 2), x]
print("witness for y g^2 y^-1 g^-2 over [y, y^2, x]:", witness(cons3, cands3))

# Sym(3), product (gh)(i) = g(h(i)), elements in the library's order.
S3 = [(0, 1, 2), (1, 0, 2), (2, 1, 0), (0, 2, 1), (1, 2, 0), (2, 0, 1)]
NAMES = ["()", "(12)", "(13)", "(23)", "(123)", "(132)"]


def pm(g, h):
    return tuple(g[h[i]] for i in range(3))


def pinv(g):
    r = [0] * 3
    for i, gi in enumerate(g):
        r[gi] = i
    return tuple(r)


a = S3[1]
for t in S3:
    ata = pm(pm(a, t), pinv(a))
    val = pm(pm(t, ata), pm(pinv(t), pinv(ata)))
    if val != S3[0]:
        print("[t, a t a^-1] over Sym3 with a=(12): witness", NAMES[S3.index(t)], "value", NAMES[S3.index(val)])
        break


def order(el, mul, one):
    k, p = 1, el
    while p != one:
        p, k = mul(p, el), k + 1
    return k


def exponent_perm(gens, m):
    one = tuple(range(m))
    elems = {one}
    frontier = [one]
    mul = lambda g, h: tuple(g[h[i]] for i in range(m))
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                p = mul(e, g)
                if p not in elems:
                    elems.add(p)
                    nxt.append(p)
        frontier = nxt
    return len(elems), fold(math.lcm, (order(e, mul, one) for e in elems))


cyc = lambda n: [tuple((i + 1) % n for i in range(n))]
dih = lambda n: [tuple((i + 1) % n for i in range(n)), tuple((n - i) % n for i in range(n))]
cases = {
    "Z2": cyc(2), "Z3": cyc(3), "Z6": cyc(6), "V4": [(1, 0, 3, 2), (2, 3, 0, 1)],
    "Sym3": [(1, 0, 2), (1, 2, 0)], "D4": dih(4), "D5": dih(5),
    "Alt4": [(1, 0, 3, 2), (1, 2, 0, 3)], "Alt5": [(1, 0, 3, 2, 4), (2, 1, 4, 3, 0)],
}
for name, gens in cases.items():
    print(name, "order, exponent =", exponent_perm(gens, len(gens[0])))
i2 = np.array([[1j, 0], [0, -1j]]); j2 = np.array([[0, 1], [-1, 0]], complex)
q8 = [np.eye(2, dtype=complex)]
head = 0
while head < len(q8):
    for g in (i2, j2):
        p = q8[head] @ g
        if not any(np.allclose(p, f) for f in q8):
            q8.append(p)
    head += 1
orders = []
for e in q8:
    k, p = 1, e
    while not np.allclose(p, np.eye(2)):
        p, k = p @ e, k + 1
    orders.append(k)
print("Q8 order, exponent =", (len(q8), fold(math.lcm, orders)))
