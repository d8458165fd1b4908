#!/usr/bin/env python3
# Copyright 2026 The qwalk Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Independent numpy/sympy oracle for the golden values used by the tests.

Graphs are rebuilt here from scratch (networkx), B is formed directly from
the normalised incidence matrices, and B_t comes from the Chebyshev
recurrence. Nothing in this script calls the C++ library.

    python3 tools/oracle/derive_golden.py > tests/data/golden.json
"""
import itertools
import json
import sys

import networkx as nx
import numpy as np
import sympy as sp

TOL = 1e-9


def arc_reversal_b(g):
    nodes = sorted(g.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    n = len(nodes)
    a = np.zeros((n, n))
    for x, y in g.edges():
        a[idx[x], idx[y]] += 1
        a[idx[y], idx[x]] += 1
    d = a.sum(axis=1)
    disc = a / np.sqrt(np.outer(d, d))
    # With M the edge frame, 2 D D^T - I collapses to N^T R N = A / sqrt(d_u d_v).
    return disc


def grid_b(n, m):
    # Faces of the toroidal grid are the unit squares; alpha(v, f) counts
    # how many corners of square f coincide with v.
    c = np.zeros((n * m, n * m))
    for i in range(n):
        for j in range(m):
            f = i * m + j
            for di, dj in ((0, 0), (1, 0), (0, 1), (1, 1)):
                c[((i + di) % n) * m + (j + dj) % m, f] += 1
    return c @ c.T / 8 - np.eye(n * m)


def idempotents(b):
    w, v = np.linalg.eigh(b)
    groups = []
    for k in np.argsort(-w):
        if groups and abs(groups[-1][0] - w[k]) < TOL:
            groups[-1][1].append(k)
        else:
            groups.append([w[k], [k]])
    return [(th, v[:, ks] @ v[:, ks].T) for th, ks in groups]


def bt_series(b, t_max):
    out = [np.eye(len(b)), b.copy()]
    for _ in range(2, t_max + 1):
        out.append(2 * b @ out[-1] - out[-2])
    return out


def first_peak(series, bound, u, v):
    for t in range(1, len(series)):
        if abs(series[t][u, v]) >= bound - 1e-9:
            return t
    return None


def first_period(series, u):
    for t in range(1, len(series)):
        if abs(series[t][u, u] - 1) < 1e-9:
            return t
    return None


def scan(b, sources, t_max, targets=None):
    """Peak pairs and periods for the given sources."""
    e = idempotents(b)
    series = bt_series(b, t_max)
    n = len(b)
    peaks, periods = [], {}
    for u in sources:
        periods[u] = first_period(series, u)
        for v in (targets if targets is not None else range(n)):
            if v == u:
                continue
            bound = sum(abs(p[u, v]) for _, p in e)
            if bound < 1e-9:
                continue
            t = first_peak(series, bound, u, v)
            if t is not None:
                peaks.append([u, v, t, round(float(bound), 12), int(np.sign(series[t][u, v]))])
    return peaks, periods


def gnm(n, m):
    g = nx.Graph()
    u, v, w = 0, n + 1, n + m + 2
    for i in range(n):
        g.add_edge(u, 1 + i)
        g.add_edge(1 + i, v)
    for j in range(m):
        g.add_edge(v, v + 1 + j)
        g.add_edge(v + 1 + j, w)
    return g, u, w


def figure2():
    g = nx.Graph([(4, 2), (2, 0), (0, 1), (1, 3)])
    for apex in (5, 6):
        for x in (2, 0, 1, 3):
            g.add_edge(apex, x)
    return g


def hamming33():
    verts = list(itertools.product(range(3), repeat=3))
    code = lambda t: t[0] + 3 * t[1] + 9 * t[2]
    g = nx.Graph()
    for x in verts:
        for y in verts:
            if sum(a != b for a, b in zip(x, y)) == 1:
                g.add_edge(code(x), code(y))
    return g


def folded_cube(d):
    bits = d - 1
    n = 1 << bits
    g = nx.Graph()
    for x in range(n):
        for i in range(bits):
            g.add_edge(x, x ^ (1 << i))
        g.add_edge(x, x ^ (n - 1))
    return g


def affine_plane_incidence():
    pts = [(x, y) for x in range(3) for y in range(3)]
    lines = set()
    for p, q in itertools.combinations(pts, 2):
        dx, dy = (q[0] - p[0]) % 3, (q[1] - p[1]) % 3
        line = frozenset(((p[0] + s * dx) % 3, (p[1] + s * dy) % 3) for s in range(3))
        lines.add(line)
    lines = sorted(sorted(x * 3 + y for x, y in l) for l in lines)
    g = nx.Graph()
    for i, l in enumerate(lines):
        for p in l:
            g.add_edge(p, 9 + i)
    return g, lines


def verdict_block(g, sources, t_max, targets=None):
    b = arc_reversal_b(g)
    peaks, periods = scan(b, sources, t_max, targets)
    return {"peaks": peaks, "periods": {str(k): v for k, v in periods.items()}}


def exact_charpoly(mat):
    x = sp.Symbol("x")
    p = sp.Matrix(mat).charpoly(x)
    return [str(c) for c in reversed(p.all_coeffs())]


def main():
    out = {"_generator": "tools/oracle/derive_golden.py"}

    out["cycles"] = {str(n): verdict_block(nx.cycle_graph(n), [0], 4 * n) for n in range(3, 17)}
    out["complete"] = {str(n): verdict_block(nx.complete_graph(n), [0], 200) for n in range(2, 11)}
    out["figure2"] = verdict_block(figure2(), range(7), 200)
    out["gnm"] = {}
    for n, m in [(1, 1), (2, 2), (3, 3), (2, 3)] + [(k, k + 1) for k in range(1, 7)]:
        g, u, w = gnm(n, m)
        out["gnm"][f"{n},{m}"] = verdict_block(g, [u], 48, [w])
    h = hamming33()
    dist = nx.single_source_shortest_path_length(h, 0)
    out["hamming33"] = verdict_block(h, [0], 48)
    out["hamming33"]["distance"] = [dist[v] for v in range(27)]
    fc = folded_cube(8)
    dist = nx.single_source_shortest_path_length(fc, 0)
    out["folded8"] = verdict_block(fc, [0], 24)
    out["folded8"]["distance"] = [dist[v] for v in range(128)]
    ap, lines = affine_plane_incidence()
    out["affine_plane"] = verdict_block(ap, [0], 24)
    out["affine_plane"]["blocks"] = lines

    # Toroidal grids: period at vertex 0 (vertex-transitive) up to t = 2000.
    out["torus_period"] = {}
    for n in range(1, 8):
        for m in range(n, 8):
            series = bt_series(grid_b(n, m), 2000)
            out["torus_period"][f"{n},{m}"] = first_period(series, 0)
    out["grid_4_4_charpoly"] = exact_charpoly(sp.Rational(1, 8) * sp.Matrix(
        np.rint(grid_b(4, 4) * 8 + 8 * np.eye(16)).astype(int)) - sp.eye(16))
    out["grid_4_n_peaks"] = {}
    for n in list(range(1, 10)) + [12]:
        b = grid_b(4, n)
        peaks, _ = scan(b, [0], 8 * n)
        out["grid_4_n_peaks"][str(n)] = peaks

    out["k3_charpoly"] = exact_charpoly(sp.Matrix(3, 3, lambda i, j: 0 if i == j else sp.Rational(1, 2)))
    c4 = sp.Matrix(4, 4, lambda i, j: sp.Rational(1, 2) if (i - j) % 4 in (1, 3) else 0)
    out["c4_charpoly"] = exact_charpoly(c4)

    # Szegedy frames: N[(x,y), x] = sqrt(q_x(y)), M[(x,y), y] = sqrt(p_y(x)).
    def szegedy(p, q):
        nx_, ny = len(q), len(p)
        nf = np.zeros((nx_ * ny, nx_))
        mf = np.zeros((nx_ * ny, ny))
        for x in range(nx_):
            for y in range(ny):
                nf[x * ny + y, x] = np.sqrt(q[x][y])
                mf[x * ny + y, y] = np.sqrt(p[y][x])
        d = nf.T @ mf
        return 2 * d @ d.T - np.eye(nx_)
    out["szegedy"] = {
        "uniform": szegedy([[.5, .5], [.5, .5]], [[.5, .5], [.5, .5]]).round(12).tolist(),
        # q_x and p_y point masses along a permutation and its inverse.
        "involution": szegedy([[0, 1], [1, 0]], [[0, 1], [1, 0]]).round(12).tolist(),
        "cycle3": szegedy([[0, 0, 1], [1, 0, 0], [0, 1, 0]],
                          [[0, 1, 0], [0, 0, 1], [1, 0, 0]]).round(12).tolist(),
        # Point masses that never meet: D = 0.
        "cycle3_mismatched": szegedy([[0, 1, 0], [0, 0, 1], [1, 0, 0]],
                                     [[0, 1, 0], [0, 0, 1], [1, 0, 0]]).round(12).tolist(),
    }
    json.dump(out, sys.stdout, indent=1, sort_keys=False)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
