#!/usr/bin/env python3
# Copyright 2026 The ferrtree Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the committed data/ fixtures.

Molecular Hamiltonians: RHF/STO-3G molecular-orbital integrals from pyscf,
written in spin-orbital form (interleaved, 2p + spin) as the coefficient of
a+_p a+_q a_r a_s. Entries at or below the cutoff are omitted.
"""

import json
import pathlib

import numpy as np
from pyscf import ao2mo, gto, scf

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

MOLECULES = {
    "h2_sto3g": ("H 0 0 0; H 0 0 0.74", 1e-10),
    "lih_sto3g": ("Li 0 0 0; H 0 0 1.595", 1e-10),
    # PubChem 3D conformer of water.
    "h2o_sto3g": ("O 0 0 0; H 0.2774 0.8929 0.2544; H 0.6068 -0.2383 -0.7169", 5e-9),
}


def fermionic(atom, cutoff):
    mol = gto.M(atom=atom, basis="sto-3g", verbose=0)
    mf = scf.RHF(mol).run()
    c = mf.mo_coeff
    n = c.shape[1]
    h1 = c.T @ mf.get_hcore() @ c
    eri = ao2mo.restore(1, ao2mo.kernel(mol, c), n)  # chemist (pq|rs)
    one, two = [], []
    for p in range(n):
        for q in range(n):
            for s in range(2):
                v = float(h1[p, q])
                if abs(v) > cutoff:
                    one.append([2 * p + s, 2 * q + s, v])
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    v = 0.5 * float(eri[p, s, q, r])
                    if abs(v) <= cutoff:
                        continue
                    for a in range(2):
                        for b in range(2):
                            two.append([2 * p + a, 2 * q + b, 2 * r + b, 2 * s + a, v])
    return {
        "format": "fermionic-1",
        "n_modes": 2 * n,
        "convention": "physicist",
        "constant": float(mol.energy_nuc()),
        "metadata": {
            "geometry_angstrom": atom,
            "basis": "sto-3g",
            "method": "RHF molecular orbitals (pyscf)",
            "cutoff": cutoff,
            "hf_energy": float(mf.e_tot),
        },
        "one_body": one,
        "two_body": two,
    }


def write(name, doc):
    path = DATA / f"{name}.json"
    path.write_text(json.dumps(doc, indent=1) + "\n")
    print(path.name, doc.get("n_modes", doc.get("n_qubits")),
          len(doc.get("one_body", [])) + len(doc.get("two_body", [])))


def garnet():
    # IQM Garnet square lattice, QB1..QB20 renumbered from 0.
    pairs = [(1, 2), (1, 4), (2, 5), (3, 4), (3, 8), (4, 5), (4, 9), (5, 6), (5, 10), (6, 7),
             (6, 11), (7, 12), (8, 9), (8, 13), (9, 10), (9, 14), (10, 11), (10, 15), (11, 12),
             (11, 16), (12, 17), (13, 14), (14, 15), (14, 18), (15, 16), (15, 19), (16, 17),
             (16, 20), (18, 19), (19, 20)]
    return {"format": "device-1", "name": "IQM Garnet", "n_qubits": 20,
            "edges": [[a - 1, b - 1] for a, b in pairs]}


def heavy_hex():
    # Three rows of ten qubits joined by bridge qubits, plus one pendant.
    edges, n = [], 0
    rows = []
    for _ in range(3):
        row = list(range(n, n + 10))
        n += 10
        edges += [[row[i], row[i + 1]] for i in range(9)]
        rows.append(row)
    for (upper, lower), cols in (((0, 1), (0, 4, 8)), ((1, 2), (2, 6))):
        for col in cols:
            edges += [[rows[upper][col], n], [n, rows[lower][col]]]
            n += 1
    edges.append([rows[0][2], n])
    n += 1
    return {"format": "device-1", "name": "heavy-hex 36", "n_qubits": n, "edges": edges}


def main():
    for name, (atom, cutoff) in MOLECULES.items():
        write(name, fermionic(atom, cutoff))
    write("garnet_20", garnet())
    write("heavy_hex_36", heavy_hex())


if __name__ == "__main__":
    main()
