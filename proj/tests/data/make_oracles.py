"""Regenerates oracles.json with numpy / sympy. The C++ side never runs this;
the JSON is checked in and read by the unit tests."""
import json

import numpy as np
import sympy

rng = np.random.default_rng(20240607)


def cplx(z):
    return [float(z.real), float(z.imag)]


def encode_vectors(vs, complex_field):
    return [[cplx(x) for x in v] if complex_field else [float(x) for x in v] for v in vs]


def random_unit(n, m, complex_field):
    x = rng.normal(size=(n, m))
    if complex_field:
        x = x + 1j * rng.normal(size=(n, m))
    return x / np.linalg.norm(x, axis=0)


def outer_gram_by_vectorisation(cols):
    # Frobenius Gram of the explicit rank-one matrices, no Hadamard shortcut
    outs = [np.outer(c, c.conj()).reshape(-1) for c in cols.T]
    return np.array([[np.vdot(b, a).real for b in outs] for a in outs])


def hermitian_cases():
    cases = []
    for n in range(1, 9):
        for complex_field in (False, True):
            a = rng.normal(size=(n, n))
            if complex_field:
                a = a + 1j * rng.normal(size=(n, n))
            a = (a + a.conj().T) / 2
            enc = [[cplx(x) for x in row] if complex_field else [float(x) for x in row] for row in a]
            cases.append({"field": "complex" if complex_field else "real", "n": n, "matrix": enc,
                          "eigenvalues": sorted(np.linalg.eigvalsh(a).tolist(), reverse=True)})
    return cases


def frame_cases():
    cases = []
    for n, m, complex_field in [(2, 3, False), (3, 5, False), (3, 2, False), (2, 4, True), (3, 4, True),
                                (4, 7, False), (2, 2, True), (4, 10, False)]:
        cols = random_unit(n, m, complex_field)
        s = cols @ cols.conj().T
        g = cols.conj().T @ cols
        op = outer_gram_by_vectorisation(cols)
        ls = np.linalg.eigvalsh(s)
        lop = np.linalg.eigvalsh(op)
        cases.append({
            "field": "complex" if complex_field else "real", "n": n, "m": m,
            "vectors": encode_vectors(cols.T, complex_field),
            "frame_operator_eigenvalues": sorted(ls.tolist(), reverse=True),
            "frame_potential": float(np.sum(np.abs(g) ** 2)),
            "outer_gram_eigenvalues": sorted(lop.tolist(), reverse=True),
            "outer_rank": int(np.linalg.matrix_rank(op)),
        })
    return cases


def simplex_np(n):
    # n+1 unit vectors in R^n: centred standard basis of R^{n+1}, expressed in an orthonormal basis of the hyperplane
    e = np.eye(n + 1) - 1.0 / (n + 1)
    q, _ = np.linalg.qr(e[:, :n])
    v = q.T @ e
    return v / np.linalg.norm(v, axis=0)


def biangular_cases():
    out = []
    for n in range(2, 8):
        s = simplex_np(n)
        cols = []
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                w = s[:, i] + s[:, j]
                cols.append(w / np.linalg.norm(w))
        cols = np.array(cols).T
        lam = np.linalg.eigvalsh(outer_gram_by_vectorisation(cols))
        out.append({"n": n, "lower": float(max(lam[0], 0.0)), "upper": float(lam[-1])})
    return out


def integer_rank_cases():
    out = []
    for _ in range(20):
        r, c = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        k = int(rng.integers(1, min(r, c) + 1))
        a = rng.integers(-3, 4, size=(r, k)) @ rng.integers(-3, 4, size=(k, c))
        out.append({"matrix": a.tolist(), "rank": int(sympy.Matrix(a.tolist()).rank())})
    return out


def cross_cases():
    out = []
    for n, m, l in [(2, 2, 3), (3, 3, 2), (2, 3, 3)]:
        f = random_unit(n, m, False)
        g = random_unit(n, l, False)
        direct = np.array([[np.sum(np.outer(f[:, i], g[:, j]) * np.outer(f[:, p], g[:, q]))
                            for p in range(m) for q in range(l)] for i in range(m) for j in range(l)])
        out.append({"n": n, "f": encode_vectors(f.T, False), "g": encode_vectors(g.T, False),
                    "eigenvalues": sorted(np.linalg.eigvalsh(direct).tolist(), reverse=True)})
    return out


if __name__ == "__main__":
    doc = {"hermitian": hermitian_cases(), "frames": frame_cases(), "biangular": biangular_cases(),
           "integer_rank": integer_rank_cases(), "cross": cross_cases()}
    with open("oracles.json", "w") as fh:
        json.dump(doc, fh, indent=1)
