#!/usr/bin/env python3
# Regenerates corpus/*.json from PARI/GP (cypari). Not needed for the build;
# the fixtures are committed. Usage: python3 tools/gen_fixtures.py corpus/
import json
import sys
from datetime import date

from cypari import pari

# label -> (level, weight, 1-based index into mfeigenbasis, primes with a_p = 0)
# The orbit index is the unique orbit whose a_p vanishes at the listed primes.
FORMS = {
    "73.2.a.c": (73, 2, 2, [59]),
    "167.2.a.a": (167, 2, 1, [11]),
    "383.2.a.a": (383, 2, 1, [13]),
    "151.2.a.a": (151, 2, 1, [41]),
    "186.4.a.a": (186, 4, 5, [11]),
    "210.4.a.e": (210, 4, 7, [11, 23]),
    "1265.4.a.c": (1265, 4, 2, [53]),
    "390.6.a.c": (390, 6, 4, [7]),
    "66.8.a.a": (66, 8, 1, [5]),
}
NMAX = 100


def coords(value, deg):
    """Power-basis coordinates of a PARI Mod / integer, constant term first."""
    if deg == 1:
        return [int(value)]
    lifted = pari.lift(value)
    out = []
    for i in range(deg):
        c = pari.polcoef(lifted, i, "y")
        if pari.denominator(c) != 1:
            raise ValueError("non-integral power-basis coordinate")
        out.append(int(c))
    return out


def main(outdir):
    pari.allocatemem(2 * 10**9)
    for label, (level, weight, idx, zeros) in FORMS.items():
        pari(f"mf=mfinit([{level},{weight}],0); L=mfeigenbasis(mf)")
        poly = pari(f"mffields(mf)[{idx}]")
        if pari.poldegree(poly) == 0:
            poly = pari("y")
        deg = int(pari.poldegree(poly))
        an = pari(f"mfcoefs(L[{idx}],{NMAX})")
        an_coords = {str(n): coords(an[n], deg) for n in range(1, NMAX + 1)}
        for p in zeros:
            assert all(c == 0 for c in an_coords[str(p)]), (label, p)
        field_poly = [int(pari.polcoef(poly, i, "y")) for i in range(deg + 1)]
        if deg == 1:
            field_poly = [0, 1]
            disc = 1
            index = 1
        else:
            disc = int(pari.nfdisc(poly))
            # index of the Z-span of the a_n inside the maximal order
            nf = pari.nfinit(poly)
            cols = [pari.nfalgtobasis(nf, pari.lift(an[n])) for n in range(1, NMAX + 1)]
            m = pari.matconcat(cols)
            index = abs(int(pari.matdet(pari.mathnf(m))))
        rec = {
            "schema_version": 1,
            "record": {
                "label": label,
                "level": level,
                "weight": weight,
                "field_poly": field_poly,
                "field_disc": disc,
                "hecke_ring_index": index,
                "basis": {"kind": "power"},
                "an": an_coords,
            },
            "provenance": {
                "source": "manual",
                "note": "Hecke eigenvalues computed with PARI/GP mfeigenbasis",
                "retrieved": date.today().isoformat(),
            },
        }
        with open(f"{outdir}/{label}.json", "w") as fh:
            json.dump(rec, fh, indent=1)
            fh.write("\n")
        print(label, "deg", deg, "disc", disc, "index", index)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "corpus")
