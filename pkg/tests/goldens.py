"""Golden partition listings used by the case and acceptance tests.

Canonical strings: parts comma-joined, descending, primes marking the
second kind where a case uses them.
"""

COR2_A_GOLDEN_6 = {
    "6", "6'", "5,1", "5',1", "4,2", "4',2", "4,2'", "4',2'",
    "3',2,1", "2,2,2", "2',2',2'",
}

COR2_B_GOLDEN_6 = {
    "6", "6'", "5,1", "4,2", "4,2'", "3,2,1", "3,2',1",
    "2,2,2", "2,2,2'", "2,2',2'", "2',2',2'",
}

COR3_A_GOLDEN_14 = {
    "14", "13,1", "12,2", "11,2,1", "10,4", "10,2,2", "9,2,2,1",
    "8,2,2,2", "7,2,2,2,1", "6,6,2", "6,4,4", "6,2,2,2,2", "2,2,2,2,2,2,2",
}

COR3_B_GOLDEN_14 = {
    "12,2", "10,4", "10,2,2", "9,4,1", "9,2,2,1", "8,4,2", "8,2,2,2",
    "7,4,2,1", "7,2,2,2,1", "4,4,4,2", "4,4,2,2,2", "4,2,2,2,2,2", "2,2,2,2,2,2,2",
}

#: Dilated gap matrices as printed for the three dilations.
D2_ROWS = ((4, 1, 3, 2), (3, 0, 2, 1), (1, 2, 0, 3), (2, 3, 1, 4))
D3_ROWS = ((6, 2, 5, 4), (4, 0, 3, 2), (1, 3, 0, 5), (2, 4, 1, 6))
D4_ROWS = ((8, 1, 7, 2), (7, 0, 6, 1), (1, 2, 0, 3), (6, 7, 5, 8))
