#!/usr/bin/env python3
"""Regenerate the golden file for the rank-4 worked example.

The eight expected summands of the restriction coefficient at u = s2 s3 for
w = s2 s1 s3 s2 s4 s3, J = {1,2,4} are written out from their closed forms
(products of hyperbolic Chern classes of the prefix roots, with signs from
X^2 = -X and mu^-2 factors from the twisted braid rule).  The file is the
reference that `klsc reproduce-paper` and the acceptance suite diff against;
it is built here without touching the rewriting engine.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from klschubert import field  # noqa: E402

RANK = 4
WORD = (2, 1, 3, 2, 4, 3)
U_WORD = (2, 3)
J = (1, 2, 4)

# prefix roots beta_1..beta_6 of WORD, in simple-root coordinates
B1 = (0, 1, 0, 0)
B2 = (1, 1, 0, 0)
B3 = (0, 1, 1, 0)
B4 = (1, 1, 1, 0)
B5 = (0, 1, 1, 1)
B6 = (1, 1, 1, 1)


def xh(*roots):
    out = field.one(RANK)
    for r in roots:
        out = out * field.x_hyp(RANK, r)
    return out


def main() -> None:
    mu_inv_sq = field.mu(RANK) ** (-2)
    minus_one = field.from_int(RANK, -1)
    # picked positions (1-based) of WORD -> expected summand
    terms = {
        (1, 3): xh(B1, B3),
        (1, 6): xh(B1, B6),
        (4, 6): xh(B4, B6),
        (1, 4, 6): minus_one * xh(B1, B4, B6),
        (1, 3, 6): minus_one * xh(B1, B3, B6),
        (1, 3, 4, 6): mu_inv_sq * xh(B1, B3, B4, B6),
        (1, 2, 4, 6): mu_inv_sq * xh(B1, B2, B4, B6),
        (1, 3, 5, 6): mu_inv_sq * xh(B1, B3, B5, B6),
    }
    total = field.zero(RANK)
    for v in terms.values():
        total = total + v
    restriction = field.mu(RANK) ** len(U_WORD) * total
    payload = {
        "rank": RANK,
        "J": list(J),
        "word": list(WORD),
        "u_word": list(U_WORD),
        "terms": [
            {"positions": list(k), "value": v.to_json_obj(), "text": v.to_text()}
            for k, v in sorted(terms.items())
        ],
        "total": total.to_json_obj(),
        "restriction": restriction.to_json_obj(),
    }
    out = (pathlib.Path(__file__).resolve().parent.parent
           / "src" / "klschubert" / "data" / "golden_a4.json")
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(payload, indent=1) + "\n")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
