"""Smoke test for the jetlink extension module.

Build first with `maturin develop` (or install the wheel), then run
`python python/smoke_test.py`.
"""

import jetlink


def main():
    eye = jetlink.meridian_eye_front()
    assert eye.validate() == []
    text = eye.to_text()
    assert jetlink.Front.parse(text) == eye
    assert eye.component_count() == 2

    line = jetlink.lambda_front(1)
    (tb, rot, winding), = line.invariants()
    assert (tb, rot, winding) == (0, 0, 1)
    stab = line.stabilize(0, True)
    assert stab.invariants()[0][0] == -1
    assert stab.destabilize(0, True) == line

    moves = stab.moves()
    assert moves and all(stab.apply(m).validate() == [] for m in moves)

    found = jetlink.search(stab, stab.apply(moves[0]), depth=4)
    assert found.result == "found", found

    braid = jetlink.torus_braid_front(2, 3)
    assert braid.render_svg().startswith("<svg")

    assert jetlink.tb_max(1, 2, 0) == jetlink.tb_max_oracle(1, 2, 0)
    verdict, form = jetlink.classify_helix((0, 0), (0, 0), "first-below")
    assert verdict in ("Isotopic", "ExceptionalPair"), verdict

    assert jetlink.cable_type_to_s3(1, 3) == (-3, 2)
    assert jetlink.tb_to_s3(0, 3) == -9
    assert jetlink.m_to_s3(0) == 1

    try:
        jetlink.Front.parse("front v2\n")
    except ValueError as e:
        assert "line 1" in str(e)
    else:
        raise AssertionError("parse should fail")

    print("smoke test ok")


if __name__ == "__main__":
    main()
