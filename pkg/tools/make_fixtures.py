"""Regenerate the JSON fixture corpus under fixtures/.

    python tools/make_fixtures.py [outdir]
"""
import sys
from pathlib import Path

from scx.complex import complex_to_json, from_facets, full_simplex, vertices
from scx.documents import dumps
from scx.matroid import is_matroid, uniform_matroid

COMPLEXES = {
    **{f"full{n}": (full_simplex(n), f"full simplex on {n} vertices") for n in range(2, 6)},
    "two-facet": (from_facets(5, [[1, 2, 3], [3, 4, 5]]), "two triangles sharing vertex 3"),
    "fig-b": (from_facets(5, [[1, 2, 3], [3, 4, 5]]), "figure (b): pure, not a matroid"),
    "chain3": (from_facets(5, [[1, 2, 3], [2, 3, 5], [3, 4, 5]]), "figure (a): three-triangle chain"),
    "u23": (uniform_matroid(2, 3), "uniform matroid U_{2,3}"),
    "u24": (uniform_matroid(2, 4), "uniform matroid U_{2,4}"),
    "u35": (uniform_matroid(3, 5), "uniform matroid U_{3,5}"),
}

# carrier vertex per fixture: the shared vertex where there is one
CARRIER = {"two-facet": [3], "fig-b": [3], "chain3": [3]}

# verdicts recorded but deliberately not asserted by the test-suite
UNASSERTED = {"chain3"}


def main(out: Path) -> None:
    out.mkdir(parents=True, exist_ok=True)
    manifest = []
    for name, (delta, desc) in COMPLEXES.items():
        (out / f"{name}.json").write_text(dumps(complex_to_json(delta)))
        (out / f"{name}-cardinality.json").write_text(
            dumps({"complex": f"{name}.json", "kind": "cardinality"}))
        carrier = CARRIER.get(name, [1])
        (out / f"{name}-carrier.json").write_text(
            dumps({"complex": f"{name}.json", "kind": "carrier", "carrier": {"T": carrier, "strict": False}}))
        check = is_matroid(delta)
        manifest.append({
            "name": name,
            "description": desc,
            "complex": f"{name}.json",
            "games": [f"{name}-cardinality.json", f"{name}-carrier.json"],
            "is_matroid": check.is_matroid,
            "matroid_witness": None if check.witness is None
            else [list(vertices(check.witness[0])), list(vertices(check.witness[1]))],
            "matroid_verdict_asserted": name not in UNASSERTED,
        })
    (out / "manifest.json").write_text(dumps(manifest))

    full3 = complex_to_json(full_simplex(3))
    (out / "zero-full3.json").write_text(dumps({"complex": full3, "p": {}}))
    (out / "uniform-two-facet.json").write_text(
        dumps({"label": "probabilistic", "coeffs": {"1,2,3": 0.5, "3,4,5": 0.5}}))
    (out / "signed-two-facet.json").write_text(
        dumps({"label": "probabilistic", "coeffs": {"1,2,3": 2.0, "3,4,5": -1.0}}))


if __name__ == "__main__":
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "fixtures")
