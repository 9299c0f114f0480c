"""Regenerate the layout tables shipped in src/ugig/data.

Every layout comes from a recognizer witness and is re-checked before it
is written.  Run from the repository root: python3 scripts/generate_fixtures.py
"""

import json
from pathlib import Path

from ugig.certificate import realize
from ugig.formats import emit_representation
from ugig.geometry import extract_graph, extract_graph_rays, validate
from ugig.graph import cycle, k33_plus_paths, s_graph
from ugig.recognizer import recognize

DATA = Path(__file__).resolve().parent.parent / "src" / "ugig" / "data"


def cycle_rays():
    table = {}
    for length in range(4, 13, 2):
        g = cycle(length)
        res = recognize(graph=g, cls="ORG")
        assert res.member and extract_graph_rays(res.representation) == g
        table[str(length)] = emit_representation(res.representation)
    return table


def segment_entry(g, cls, mode, check, provenance):
    res = recognize(graph=g, cls=cls)
    assert res.member, f"{cls} witness missing"
    rep = realize(res.certificate, mode)
    assert extract_graph(rep) == g and validate(rep, check).valid
    return {
        "h": sorted(rep.h_vertices),
        "v": sorted(rep.v_vertices),
        "segments": emit_representation(rep).splitlines(),
        "class": check,
        "provenance": provenance,
    }


def fixtures():
    s, k = s_graph(), k33_plus_paths()
    return {
        "s_graph_useg": segment_entry(
            s, "UGIG", "vertical_only", "USEG_V",
            "recognizer certificate realized with unit vertical side and rank-length horizontals",
        ),
        "s_graph_ugig": segment_entry(
            s, "UGIG", "both", "UGIG",
            "recognizer witness: the reconstructed S admits unit segments on both sides",
        ),
        "k33_gig": segment_entry(
            k, "GIG", "none", "GIG", "recognizer certificate realized with rank coordinates",
        ),
        "k33_ugig": segment_entry(
            k, "UGIG", "both", "UGIG",
            "recognizer witness: K33 with three matched 3-edge paths admits unit segments",
        ),
    }


def main():
    (DATA / "cycle_rays.json").write_text(json.dumps(cycle_rays(), indent=1, sort_keys=True) + "\n")
    (DATA / "fixtures.json").write_text(json.dumps(fixtures(), indent=1, sort_keys=True) + "\n")
    print("wrote", DATA / "cycle_rays.json", DATA / "fixtures.json")


if __name__ == "__main__":
    main()
