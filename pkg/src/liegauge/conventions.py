"""Registry of documented convention choices surfaced as report warnings.

Each entry matches a section of CONVENTIONS.md in the repository root.
Reports attach these so that a nonstandard-looking sign in the output can
always be traced to a deliberate, derived choice rather than a typo.
"""

CONVENTIONS = {
    "W1": (
        "odd-power differentials: graded Leibniz gives "
        "d((g^-1 dg)^(2p+1)) = -(g^-1 dg)^(2p+2) and "
        "d((dg g^-1)^(2p+1)) = +(dg g^-1)^(2p+2); displays with the "
        "opposite signs circulate (CONVENTIONS.md W1)"
    ),
    "W2": (
        "contraction of dg g^-1: direct substitution gives "
        "T_L(a) - g T_R(a) g^-1; the variant with the conjugation on the "
        "other factor does not normalize to this (CONVENTIONS.md W2)"
    ),
    "W3": (
        "equivariance orientation: the engine proves "
        "L_b lam_a = lam_([a,b]); fundamental fields of a left action "
        "anti-commute, so displays written with lam_([b,a]) flip this "
        "bracket (CONVENTIONS.md W3)"
    ),
    "W4": (
        "equivariant coboundary orientation: with the left action by "
        "pullback along x -> g^-1 x, the group coboundary must act on its "
        "first term (displays acting on the last term satisfy the Cartan "
        "relation but not dbar^2 = 0); the fundamental field is "
        "X_A(x) = +A x and the group contraction transports by the "
        "inverse adjoint of the leading arguments (CONVENTIONS.md W4)"
    ),
    "W5": (
        "rank-one special-linear domains: a vanishing obstruction here is "
        "reported as computed; the stronger topological vanishing sometimes "
        "claimed for this case is not verified by this package "
        "(CONVENTIONS.md W5)"
    ),
}


def warning(wid: str) -> dict:
    return {"id": wid, "message": CONVENTIONS[wid]}
