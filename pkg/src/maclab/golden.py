"""Reference data for the built-in worked examples.

Each entry is keyed by the id accepted by the command line's `example`
subcommand.  Fillings are given top row first; polynomials as
{(q_exp, t_exp): coeff} dictionaries.
"""

# id "1.5": shape (3,2), weight (4,1); three count systems, and the summand
# each contributes under formulas 1 and 2.
EX_1_5 = {
    "lam": (3, 2),
    "mu": (4, 1),
    "systems": [
        {(1, 1): (0, 1), (1, 2): (2, 2), (2, 2): (2, 2)},
        {(1, 1): (1, 1), (1, 2): (1, 2), (2, 2): (2, 2)},
        {(1, 1): (1, 1), (1, 2): (2, 2), (2, 2): (1, 2)},
    ],
    "summands_formula1": [
        {(0, 2): 1},
        {(1, 3): 1, (1, 4): 1},
        {(0, 3): 1, (0, 4): 1},
    ],
    "summands_formula2": [
        {(0, 4): 1},
        {(1, 3): 1, (1, 4): 1},
        {(0, 2): 1, (0, 3): 1},
    ],
}

# id "1.6": shape and weight (4,2); six count systems.  The printed summands
# carry inverted variables, so they are compared after negating exponents.
EX_1_6 = {
    "lam": (4, 2),
    "mu": (4, 2),
    "n_lam": 2,
    "n_lam_conj": 7,
    "conjugate": (2, 2, 1, 1),
    "systems": [
        {(1, 1): (0, 2), (1, 2): (2, 2), (2, 2): (2, 2)},
        {(1, 1): (1, 2), (1, 2): (1, 2), (2, 2): (2, 2)},
        {(1, 1): (1, 2), (1, 2): (2, 2), (2, 2): (1, 2)},
        {(1, 1): (2, 2), (1, 2): (2, 2), (2, 2): (0, 2)},
        {(1, 1): (2, 2), (1, 2): (0, 2), (2, 2): (2, 2)},
        {(1, 1): (2, 2), (1, 2): (1, 2), (2, 2): (1, 2)},
    ],
    "summands_formula3_inverted": [
        {(0, -3): 1},
        {(0, -4): 1, (0, -5): 2, (0, -6): 1},
        {(-1, -4): 1, (-1, -5): 2, (-1, -6): 1},
        {(-2, -7): 1},
        {(0, -7): 1},
        {(0, -3): 1, (0, -4): 1, (-1, -6): 1, (-1, -7): 1},
    ],
    "summands_formula4_inverted": [
        {(0, -3): 1},
        {(0, -3): 1, (0, -4): 2, (0, -5): 1},
        {(-1, -4): 1, (-1, -5): 2, (-1, -6): 1},
        {(-2, -7): 1},
        {(0, -7): 1},
        {(0, -5): 1, (0, -6): 1, (-1, -6): 1, (-1, -7): 1},
    ],
}

# id "sec3": shape (4,4,3) with the second quadruple set.
SEC3 = {
    "filling_top_rows": [
        (5, 4, 5),
        (3, 6, 3, 1),
        (1, 7, 2, 8),
    ],
    "set_id": 2,
    "member_quadruples": [
        (0, 0, 4, 5),
        (5, 4, 3, 6),
        (4, 5, 6, 3),
        (3, 3, 1, 2),
    ],
    "eta_quadruples": 4,
    "eta": 6,
    "cross_triples": [(4, 6, 1), (6, 7, 8)],
}

# id "sec5": the two-row bijection example with the second quadruple set.
SEC5 = {
    "set_id": 2,
    "tau_top_rows": [
        (2, 3, 2, 4, 4, 5, 4, 5, 6, 8, 7),
        (3, 5, 1, 3, 7, 6, 5, 1, 4, 2, 6),
    ],
    "rho_word": [10, 6, 2],  # applied left to right to tau
    "sigma_top_rows": [
        (2, 2, 3, 4, 4, 4, 5, 5, 6, 7, 8),
        (3, 5, 1, 3, 7, 6, 5, 1, 4, 2, 6),
    ],
    "gamma_sigma_top_rows": [
        (2, 2, 3, 4, 4, 4, 5, 5, 6, 7, 8),
        (3, 5, 2, 1, 7, 6, 5, 1, 4, 6, 3),
    ],
    "gamma_tau_top_rows": [
        (2, 3, 2, 4, 4, 5, 4, 5, 6, 8, 7),
        (3, 2, 5, 1, 7, 5, 6, 1, 4, 3, 6),
    ],
    "quinv_tau": 72,
    "eta_gamma_tau": 72,
    "maj": 6,
}

# id "sec6": canonical structure on three-row rectangles of width 11, the
# sorting permutations, blocks, and one explicit two-stage row action; plus
# the (5,5,5) canonicalization chain.
SEC6 = {
    "canonical_top_rows": [
        (9, 9, 8, 8, 8, 5, 5, 5, 5, 3, 3),
        (4, 3, 6, 3, 9, 4, 3, 2, 9, 2, 6),
        (2, 2, 8, 7, 8, 1, 6, 4, 6, 2, 7),
    ],
    "dual_canonical_top_rows": [
        (9, 9, 8, 8, 8, 5, 5, 5, 5, 3, 3),
        (6, 4, 4, 3, 9, 3, 3, 2, 9, 2, 6),
        (8, 2, 2, 1, 8, 7, 6, 4, 6, 2, 7),
    ],
    "pi_diamond_one_line": (1, 2, 6, 8, 3, 4, 9, 10, 5, 11, 7),
    "pi_bullet_one_line": (5, 7, 3, 8, 1, 6, 9, 10, 2, 11, 4),
    "neutral_block_row1": {"entries": (2, 7, 6), "upper": 3},
    "nondescent_block_row1": (8, 7, 6, 4, 2, 7),
    "alpha_example": {"entries": (6, 3, 9), "upper": 8, "clamped": (6, 3, 8)},
    "row_action_target": (1, 7, 8, 6, 6, 2, 2, 4, 8, 2, 7),
    "row_action_result_top_rows": [
        (9, 9, 8, 8, 8, 5, 5, 5, 5, 3, 3),
        (4, 3, 6, 3, 9, 4, 3, 2, 9, 2, 6),
        (1, 7, 8, 6, 6, 2, 2, 4, 8, 2, 7),
    ],
    "sort_input_top_rows": [
        (5, 1, 3, 2, 1),
        (3, 3, 2, 4, 7),
        (3, 8, 1, 2, 2),
    ],
    "sort_steps_top_rows": [
        [
            (5, 3, 2, 1, 1),
            (3, 2, 4, 3, 7),
            (3, 1, 2, 8, 2),
        ],
        [
            (5, 3, 2, 1, 1),
            (3, 2, 7, 4, 3),
            (3, 1, 2, 2, 8),
        ],
        [
            (5, 3, 2, 1, 1),
            (3, 2, 7, 4, 3),
            (8, 1, 2, 2, 3),
        ],
    ],
}

# A sorted-but-not-canonical witness: the neutral block of the bottom row
# mixes entries below and above its upper value in the wrong order.
SORTED_NOT_CANONICAL_TOP_ROWS = [
    (5, 5, 5, 5, 3, 3, 3),
    (4, 4, 2, 2, 2, 1, 4),
    (2, 5, 1, 3, 5, 2, 1),
]
