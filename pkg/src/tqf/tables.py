"""Published class numbers and type numbers, frozen as data.

Rows are (N1, N2, h, T).
"""

from __future__ import annotations

__all__ = ["TABLE_SMALL_LEVELS", "TABLE_PRIME_POWER", "CLASS_ONE_LEVELS", "TABLE_PRIME_POWER_CORRECTIONS"]

# every admissible level with N1*N2 <= 100, sorted by N1*N2 then N1
TABLE_SMALL_LEVELS: tuple[tuple[int, int, int, int], ...] = (
    (2, 1, 1, 1), (3, 1, 1, 1), (5, 1, 1, 1), (2, 3, 1, 1), (3, 2, 1, 1), (7, 1, 1, 1),
    (8, 1, 1, 1), (2, 5, 1, 1), (5, 2, 1, 1), (11, 1, 2, 2), (3, 4, 1, 1), (13, 1, 1, 1),
    (2, 7, 2, 1), (7, 2, 2, 2), (3, 5, 2, 1), (5, 3, 2, 2), (17, 1, 2, 2), (2, 9, 1, 1),
    (19, 1, 2, 2), (5, 4, 2, 1), (3, 7, 2, 2), (7, 3, 2, 1), (2, 11, 1, 1), (11, 2, 3, 2),
    (23, 1, 3, 3), (3, 8, 2, 1), (8, 3, 2, 2), (2, 13, 3, 2), (13, 2, 3, 2), (27, 1, 2, 2),
    (7, 4, 3, 2), (29, 1, 3, 3), (2, 15, 2, 1), (3, 10, 4, 2), (5, 6, 4, 2), (30, 1, 2, 1),
    (31, 1, 3, 3), (32, 1, 2, 2), (3, 11, 2, 1), (11, 3, 4, 3), (2, 17, 2, 2), (17, 2, 4, 2),
    (5, 7, 4, 3), (7, 5, 4, 2), (37, 1, 3, 2), (2, 19, 3, 2), (19, 2, 5, 3), (3, 13, 4, 3),
    (13, 3, 4, 2), (5, 8, 4, 2), (8, 5, 2, 1), (41, 1, 4, 4), (2, 21, 4, 2), (3, 14, 4, 2),
    (7, 6, 6, 2), (42, 1, 2, 1), (43, 1, 4, 3), (11, 4, 5, 3), (5, 9, 4, 2), (2, 23, 2, 1),
    (23, 2, 6, 4), (47, 1, 5, 5), (3, 16, 4, 2), (2, 25, 3, 2), (3, 17, 4, 2), (17, 3, 6, 4),
    (13, 4, 6, 2), (53, 1, 5, 4), (2, 27, 3, 2), (27, 2, 5, 3), (5, 11, 4, 2), (11, 5, 6, 4),
    (7, 8, 6, 4), (8, 7, 4, 2), (3, 19, 4, 3), (19, 3, 6, 2), (2, 29, 3, 2), (29, 2, 7, 3),
    (59, 1, 6, 6), (3, 20, 6, 2), (5, 12, 8, 3), (61, 1, 5, 4), (2, 31, 4, 2), (31, 2, 8, 5),
    (7, 9, 6, 3), (5, 13, 6, 3), (13, 5, 6, 3), (2, 33, 4, 2), (3, 22, 6, 2), (11, 6, 10, 3),
    (66, 1, 4, 2), (67, 1, 6, 4), (17, 4, 8, 3), (3, 23, 4, 2), (23, 3, 8, 5), (2, 35, 4, 2),
    (5, 14, 8, 3), (7, 10, 10, 3), (70, 1, 2, 1), (71, 1, 7, 7), (8, 9, 4, 2), (73, 1, 6, 4),
    (2, 37, 5, 3), (37, 2, 9, 4), (3, 25, 6, 3), (19, 4, 9, 4), (7, 11, 6, 4), (11, 7, 8, 3),
    (2, 39, 6, 2), (3, 26, 8, 3), (13, 6, 12, 4), (78, 1, 2, 1), (79, 1, 7, 6), (5, 16, 8, 3),
    (2, 41, 4, 3), (41, 2, 10, 4), (83, 1, 8, 7), (3, 28, 8, 3), (7, 12, 12, 2), (5, 17, 6, 3),
    (17, 5, 8, 3), (2, 43, 5, 3), (43, 2, 11, 5), (3, 29, 6, 3), (29, 3, 10, 6), (8, 11, 4, 3),
    (11, 8, 10, 3), (89, 1, 8, 7), (2, 45, 6, 2), (5, 18, 12, 3), (7, 13, 8, 3), (13, 7, 8, 4),
    (23, 4, 11, 6), (3, 31, 6, 4), (31, 3, 10, 3), (2, 47, 4, 2), (47, 2, 12, 7),
    (5, 19, 8, 4), (19, 5, 10, 6), (3, 32, 8, 3), (32, 3, 6, 4), (97, 1, 8, 5), (2, 49, 6, 3),
    (11, 9, 10, 5),
)

# levels p^(2r+1) * N2, several far beyond the small table
TABLE_PRIME_POWER: tuple[tuple[int, int, int, int], ...] = (
    (5, 1, 1, 1),
    (3, 5, 2, 1),
    (27, 1, 2, 2),
    (5, 7, 4, 3),
    (125, 1, 9, 7),
    (27, 5, 10, 4),
    (27, 7, 12, 6),
    (243, 1, 14, 10),
    (125, 2, 25, 9),
    (343, 1, 25, 16),
    (5, 81, 36, 11),
    (125, 6, 100, 18),
    (243, 4, 81, 25),
    (125, 8, 100, 28),
    (1331, 1, 102, 54),
    (2187, 1, 122, 70),
    (3125, 1, 209, 117),
    (343, 12, 588, 77),
    (16807, 1, 1201, 625),
    (2197, 16, 4056, 1027),
    (78125, 1, 5209, 2667),
    (161051, 2, 36603, 9272),
    (823543, 1, 58825, 29584),
)

# type numbers that differ from the printed row, keyed by (N1, N2):
# (printed T, recomputed T).  The recomputed value is confirmed by genus
# enumeration with an exact mass check.
TABLE_PRIME_POWER_CORRECTIONS: dict[tuple[int, int], tuple[int, int]] = {
    (1331, 1): (54, 62),
}

# levels whose genus of orders has a single type
CLASS_ONE_LEVELS: tuple[tuple[int, int], ...] = (
    (2, 1), (2, 3), (2, 5), (2, 7), (2, 9), (2, 11), (2, 15), (2, 23), (3, 1), (3, 2),
    (3, 4), (3, 5), (3, 8), (3, 11), (5, 1), (5, 2), (5, 4), (7, 1), (7, 3), (8, 1),
    (8, 5), (13, 1), (30, 1), (42, 1), (70, 1), (78, 1),
)
