"""Transcription of the labelled 4-cube (n = 5 qubits).

Word <-> label pairs were matched by node position between the two drawings
of the cube; edges are the 32 segments of the word-labelled drawing.
"""

CUBE5_LABELS = {
    "0000": "P1 x P1 x P1 x P1 x P1",
    "0001": "P1 x P1 x P1 x P3",
    "0010": "P1 x P1 x P3 x P1",
    "0011": "P1 x P1 x P7",
    "0100": "P1 x P3 x P1 x P1",
    "0101": "P1 x P3 x P3",
    "0110": "P1 x P7 x P1",
    "0111": "P1 x P15",
    "1000": "P3 x P1 x P1 x P1",
    "1001": "P3 x P1 x P3",
    "1010": "P3 x P3 x P1",
    "1011": "P3 x P7",
    "1100": "P7 x P1 x P1",
    "1101": "P7 x P3",
    "1110": "P15 x P1",
    "1111": "P31",
}

CUBE5_EDGES = {
    ("0000", "0001"), ("0000", "0010"), ("0000", "0100"), ("0000", "1000"),
    ("0001", "0011"), ("0001", "0101"), ("0001", "1001"), ("0010", "0011"),
    ("0010", "0110"), ("0010", "1010"), ("0011", "0111"), ("0011", "1011"),
    ("0100", "0101"), ("0100", "0110"), ("0100", "1100"), ("0101", "0111"),
    ("0101", "1101"), ("0110", "0111"), ("0110", "1110"), ("0111", "1111"),
    ("1000", "1001"), ("1000", "1010"), ("1000", "1100"), ("1001", "1011"),
    ("1001", "1101"), ("1010", "1011"), ("1010", "1110"), ("1011", "1111"),
    ("1100", "1101"), ("1100", "1110"), ("1101", "1111"), ("1110", "1111"),
}

# vertices called out individually in the acceptance criteria
SPOT_CHECKS = {
    "1000": (3, 1, 1, 1),
    "0001": (1, 1, 1, 3),
    "0110": (1, 7, 1),
    "1001": (3, 1, 3),
}
