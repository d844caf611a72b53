"""
Theorem summaries and Brill-Noether stratum records for genera 7 to 14.

These are statements recorded with their citations, not computations.
"""

from typing import Any, Dict, List

from app.models.errors import UnknownGenusError
from app.models.projection import StratumRecord

# (m, f) local data whose targets were analysed case by case
CLASSIFIED_LOCAL_DATA = frozenset({(1, 1), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)})

THEOREM_SUMMARIES: Dict[int, Dict[str, Any]] = {
    7: {
        "irr": "=4",
        "components": ["S × M"],
        "citation": "If g=7, then irr_L(S)=4 and W^2_4(S,L) is isomorphic to S×M",
    },
    8: {
        "irr": "=4",
        "components": ["birational to a P^3-bundle over S"],
        "citation": "If g=8, then irr_L(S)=4 and W^2_4(S,L) has a component birational to a P^3-bundle over S",
    },
    9: {
        "irr": "=4",
        "components": [
            "3-dimensional: P^1-bundle over M",
            "2-dimensional: nontrivial correspondence between S and M",
        ],
        "citation": "If g=9, then irr_L(S)=4 and W^2_4(S,L) has at least two irreducible components",
    },
    10: {
        "irr": "≤4",
        "components": ["S^[2] (dimension 4)", "P(E) (dimension 3)"],
        "citation": "a 4-dimensional one (isomorphic to the Hilbert square S^[2]) and a 3-dimensional one (isomorphic to P(E))",
    },
    11: {
        "irr": "=4",
        "components": ["M"],
        "citation": "If g=11, then irr_L(S)=4 and W^2_4(S,L) has an irreducible component isomorphic to M",
    },
    12: {
        "irr": "≤4",
        "components": ["unirational 3-dimensional component"],
        "citation": "If g=12, then irr_L(S)≤4 and W^2_4(S,L) has a unirational 3-dimensional component",
    },
    13: {
        "irr": "≤4",
        "components": ["dim W^2_4(S,L) ≥ 1"],
        "citation": "If g=13, then irr_L(S)≤4 and W^2_4(S,L) is at least 1-dimensional",
    },
    14: {
        "irr": "≤4",
        "components": ["S"],
        "citation": "If g=14, then irr_L(S)≤4 and W^2_4(S,L) has an irreducible component isomorphic to S",
    },
}

STRATUM_RECORDS: Dict[int, List[StratumRecord]] = {
    7: [
        StratumRecord(
            c2=5, m=1, dimension=4, description="S × M",
            citation="ψ_1: S×M ≅ G_1 → W^2_4(S,L)_{5,1} is an isomorphism",
        ),
    ],
    8: [
        StratumRecord(
            c2=5, m=1, dimension=5, description="birational to a P^3-bundle over S",
            citation="for every point p∈S we have h^0(E⊗I_p)=4",
        ),
    ],
    9: [
        StratumRecord(
            c2=6, m=2, dimension=3, description="R_2, a P^1-bundle over M",
            citation="R_2 is a P^1-bundle over M, with a closed immersion R_2 ↪ S^[2]",
        ),
        StratumRecord(
            c2=6, m=2, dimension=2, description="W_S, a correspondence between S and M",
            citation="an irreducible component W_S ⊂ R_2 ∩ S^[2]_nred",
        ),
    ],
    10: [
        StratumRecord(
            c2=6, m=2, dimension=4, description="S^[2]",
            citation="for any ξ∈S^[2], the vector space H^0(E⊗I_ξ) has dimension ≥3",
        ),
        StratumRecord(
            c2=6, m=None, dimension=3, description="P(E)",
            citation="a component isomorphic to P(E)",
        ),
    ],
    11: [
        StratumRecord(
            c2=7, m=3, dimension=2, description="M",
            citation="for every E∈M, there exists a unique ξ∈S^[3] such that h^1(E⊗I_ξ)≥2",
        ),
    ],
    12: [
        StratumRecord(
            c2=7, m=3, dimension=3, description="image of P(Ext^1(E^∨[1],F)) = P^3",
            citation="R_3 equals P(Ext^1(E^∨[1],F))=P^3",
        ),
    ],
    13: [
        StratumRecord(
            c2=8, m=4, dimension=None, description="at least 1-dimensional",
            citation="W^2_4(S,L) is at least 1-dimensional",
        ),
    ],
    14: [
        StratumRecord(
            c2=8, m=None, dimension=2, description="S",
            citation="an irreducible component isomorphic to S",
        ),
    ],
}


def get_theorem_summary(genus: int) -> Dict[str, Any]:
    """Static summary record for one genus"""
    if genus not in THEOREM_SUMMARIES:
        raise UnknownGenusError(f"no theorem summary for genus {genus}; covered genera are 7..14")
    summary = dict(THEOREM_SUMMARIES[genus])
    summary["genus"] = genus
    summary["strata"] = [record.model_dump() for record in STRATUM_RECORDS[genus]]
    return summary


def is_classified(local_datum: tuple) -> bool:
    return tuple(local_datum) in CLASSIFIED_LOCAL_DATA
