"""numpy oracle for the matrix-group and representation checks."""
import itertools
import math

import numpy as np


def ell(u):
    return np.linalg.norm(np.eye(len(u)) - u, 2)


def close(gens, cap=2000):
    elems = [np.eye(len(gens[0]), dtype=complex)]
    i = 0
    while i < len(elems):
        for g in gens:
            p = elems[i] @ g
            if not any(np.linalg.norm(p - e, 2) < 1e-8 for e in elems):
                elems.append(p)
        i += 1
        assert len(elems) < cap
    return elems


def su2(a, b):
    return np.array([[a, b], [-np.conj(b), np.conj(a)]], dtype=complex)


def nullity(m, thr=1e-8):
    s = np.linalg.svd(m, compute_uv=False)
    return m.shape[1] - int(np.sum(s > thr))


def commutant_dim(images):
    n = len(images[0])
    rows = [np.kron(p, np.eye(n)) - np.kron(np.eye(n), p.T) for p in images]
    return nullity(np.vstack(rows))


def fixed_dim(images):
    n = len(images[0])
    basis = []
    for j in range(n):
        for k in range(j + 1, n):
            a = np.zeros((n, n), complex); a[j, k] = 1; a[k, j] = -1; basis.append(a)
            s = np.zeros((n, n), complex); s[j, k] = 1j; s[k, j] = 1j; basis.append(s)
    for j in range(n - 1):
        d = np.zeros((n, n), complex); d[j, j] = 1j; d[j + 1, j + 1] = -1j; basis.append(d)
    cols = []
    for b in basis:
        col = np.concatenate([(p @ b @ p.conj().T - b).reshape(-1) for p in images])
        cols.append(np.concatenate([col.real, col.imag]))
    return nullity(np.array(cols).T)


X = np.array([[0, 1], [1, 0]], complex)
Z = np.array([[1, 0], [0, -1]], complex)
I2 = np.eye(2)
print("pauli order", len(close([X, Z])))
print("pauli X,Z commutator ell", ell(X @ Z @ X.conj().T @ Z.conj().T), "rhs", 2 * ell(X) * ell(Z))
q = close([su2(1j, 0), su2(0, 1)])
print("quaternion order", len(q), "ells", sorted(round(ell(e), 12) for e in q))
bt = close([su2(1j, 0), su2(0.5 + 0.5j, 0.5 + 0.5j)])
print("binary tetrahedral order", len(bt), "min nonzero ell", min(ell(e) for e in bt if ell(e) > 1e-9))
print("cyclic13 ell", 2 * math.sin(math.pi / 13))
for n in range(2, 13):
    w = np.exp(2j * np.pi / n)
    C = np.diag([w ** j for j in range(n)])
    S = np.roll(np.eye(n), 1, axis=0)
    K = C @ S @ C.conj().T @ S.conj().T
    print(f"heis n={n} scalar={K[0,0]:.12f} clock={ell(C)!r} shift={ell(S)!r}")

# Alt(5) icosahedral rep from the half-turn about (phi^2, 1, phi) and the axis cycle.
phi = (1 + 5 ** 0.5) / 2
ax = np.array([phi * phi, 1, phi]); ax /= np.linalg.norm(ax)
A = 2 * np.outer(ax, ax) - np.eye(3)
B = np.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]], float)
ico = close([A.astype(complex), B.astype(complex)])
print("icosahedral order", len(ico), "commutant", commutant_dim(ico), "fixed", fixed_dim(ico))
print("Q8 commutant", commutant_dim(q), "fixed", fixed_dim(q))
for n in (8,):
    w = np.exp(2j * np.pi / n)
    g = close([np.diag([w, np.conj(w)])])
    print(f"Z/{n} in SU(2): order {len(g)} commutant {commutant_dim(g)} fixed {fixed_dim(g)}")
# The other generator choice diag(e^{i pi/n}, e^{-i pi/n}) generates a group of order 2n.
w = np.exp(1j * np.pi / 8)
g = close([np.diag([w, np.conj(w)])])
print("diag(e^{i pi/8}, ...) generates order", len(g), "fixed", fixed_dim(g))
print("trivial n=2 commutant", commutant_dim([I2]), "fixed", fixed_dim([I2]))
sum_rep = [np.block([[np.eye(1), np.zeros((1, 2))], [np.zeros((2, 1)), p]]) for p in q]
print("1 + Q8 commutant", commutant_dim(sum_rep), "fixed", fixed_dim(sum_rep))

for j in range(5):
    m = 6 * 2 ** j
    R = lambda th: np.array([[math.cos(th), -math.sin(th), 0], [math.sin(th), math.cos(th), 0], [0, 0, 1]])
    F = np.diag([1.0, -1, -1])
    els = [R(2 * math.pi * i / m) for i in range(m)] + [R(2 * math.pi * i / m) @ F for i in range(m)]
    print(f"dihedral m={m} order={len(els)} min_ell={min(ell(e) for e in els if ell(e) > 1e-10)!r}")
