"""Smoke test for the pygradmod extension.

Build first:  maturin develop -m crates/python/Cargo.toml -F extension-module
"""
import math
from pathlib import Path

import pygradmod as g

ROOT = Path(__file__).resolve().parent.parent


def main():
    ring = g.GradedRing(3, 2)
    assert ring.var_names == ["t1", "t2"]
    assert ring.var_degrees == [2, 2]

    k = g.Module.residue_field(ring)
    assert k.projective_dimension() == 2
    assert k.depth() == 0
    assert k.krull_dimension() == 0
    assert k.syzygy_order() == 0
    assert sorted(k.betti()) == [(0, 0, 1), (1, 2, 2), (2, 4, 1)]

    free = g.Module.free(ring, [0])
    assert free.depth() == 2 and free.krull_dimension() == 2
    assert free.syzygy_order() == math.inf
    assert free.is_reflexive()

    m = g.Module(ring, [0], [["t1"]])
    assert m.projective_dimension() == 1
    assert m.is_regular_sequence(["t2"])
    assert not m.is_regular_sequence(["t1"])
    assert m.is_cm_of_projdim(1)
    assert m.cm_dual(1).cm_dual(1).hilbert_series() == m.hilbert_series()

    text = (ROOT / "crates" / "core" / "fixtures" / "suspension.mod").read_text()
    f = g.PresentationFile.parse(text)
    assert g.PresentationFile.parse(f.print()).print() == f.print()
    c = f.complex(f.complex_names()[0])
    assert c.validate() == []
    max_j, everywhere, _ = c.exactness_profile()
    agree, order, _ = c.crosscheck()
    assert agree
    print(f"suspension: max_j={max_j} exact_everywhere={everywhere} syzord={order}")

    ids = g.corpus_ids()
    bad = {i: g.corpus_mismatches(i) for i in ids}
    bad = {i: v for i, v in bad.items() if v}
    assert not bad, bad

    code, out, _ = g.run(["syzord", "--corpus", "k"])
    assert code == 0 and '"syzord"' in out

    try:
        g.PresentationFile.parse("[ring]\nchar = 4\nvars = t1\n")
    except ValueError as e:
        assert "prime" in str(e)
    else:
        raise AssertionError("char 4 accepted")

    print(f"ok: {len(ids)} corpus entries checked")


if __name__ == "__main__":
    main()
