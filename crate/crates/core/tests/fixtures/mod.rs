//! Knitting grids transcribed from the printed arrays.
//!
//! Each grid row is a whitespace-separated token list indexed from the
//! left edge of the array: `_` is an empty slot, `.` a position the
//! expansion has not reached, and a number is a lambda value, wrapped in one
//! pair of parentheses when circled and two for the start.

pub const I7_X: [&str; 8] = [
    "_ . _ . _ . _ 1 _ 0 _",
    ". _ . _ . _ 1 _ 1 _ 0",
    ". . . . . 1 (1) 1 1 1 0 0",
    ". _ . _ 1 _ 1 _ 0 _ 1 _ 0",
    "_ . _ 1 _ 1 _ 0 _ 0 _ 1 _ 0",
    ". _ 1 _ 1 _ 0 _ 0 _ 0 _ 1 _ 0",
    "_ ((1)) _ 1 _ 0 _ 0 _ 0 _ (0) _ 1 _ 0",
    ". _ 1 _ 0 _ (0) _ 0 _ 0 _ (0) _ (1) _ 0",
];

pub const I7_N: [&str; 8] = [
    "_ . _ 1 _ 0 _ (1) _ 1 _ 0",
    ". _ 1 _ 1 _ 1 _ 1 _ 1 _ 0",
    "((1)) 1 0 1 1 2 1 2 1 1 0 1 1 0",
    ". _ 1 _ 1 _ 2 _ 1 _ 1 _ 0",
    "_ . _ 1 _ 1 _ 1 _ 1 _ 0",
    ". _ . _ 1 _ 0 _ 1 _ 0",
    "_ . _ . _ (1) _ 0 _ (1)",
    ". _ . _ . _ (0) _ (0)",
];

pub const I7_Y1: [&str; 8] = [
    "_ . _ . _ . _ (1) _",
    ". _ . _ . _ 1 _ 0",
    ". . . . . 1 1 1 0 0",
    ". _ . _ 1 _ 0 _ 1 _ 0",
    "_ . _ 1 _ 0 _ 0 _ 1 _ 0",
    ". _ 1 _ 0 _ 0 _ 0 _ 1 _ 0",
    "_ 1 _ 0 _ (0) _ 0 _ (0) _ 1 _ 0",
    "((1)) _ 0 _ 0 _ (0) _ (0) _ 0 _ 1 _ (0)",
];

pub const I7_Y2: [&str; 8] = [
    "((1)) _ 0 _ 0 _ 1 _ 0 _ 0 _ 1 _ (0)",
    "_ 1 _ 0 _ 1 _ 1 _ 0 _ 1 _ 0",
    ". . 1 1 1 0 1 (1) 1 1 1 0 0",
    "_ . _ 1 _ 1 _ 1 _ 1 _ 0",
    ". _ . _ 1 _ 1 _ 1 _ 0",
    "_ . _ . _ 1 _ 1 _ 0",
    ". _ . _ . _ 1 _ 0",
    "_ . _ . _ . _ (1)",
];

pub const I7_Z2: [&str; 8] = [
    "_ . _ . _ . _ 1 _ 0",
    ". _ . _ . _ 1 _ 1 _ 0",
    ". . . . . 1 1 1 0 1 (1) 0",
    ". _ . _ 1 _ 0 _ 1 _ 1 _ 0",
    "_ . _ 1 _ 0 _ 0 _ 1 _ 1 _ 0",
    ". _ 1 _ 0 _ 0 _ 0 _ 1 _ 1 _ 0",
    "_ ((1)) _ 0 _ (0) _ 0 _ 0 _ 1 _ 1 _ (0)",
    ". _ (1) _ (0) _ 0 _ 0 _ (0) _ 1 _ 0 _ (0)",
];

pub const I7_Z1: [&str; 8] = [
    "_ . _ . _ . _ 1 _ 0 _ 0 _ 1 _ (0) _ 1 _ 0 _ 0 _ 1 _ 0 _ 1 _ (0) _ 0 _ 1 _ 0 _ 0",
    ". _ . _ . _ 1 _ 1 _ 0 _ 1 _ 1 _ 1 _ 1 _ 0 _ 1 _ 1 _ 1 _ 1 _ 0 _ 1 _ 1 _ 0",
    ". . . . . 1 1 1 (0) 1 1 1 0 1 1 2 1 1 0 1 1 1 (0) 1 1 2 1 1 0 1 1 1 0 1 0 0",
    ". _ . _ 1 _ 0 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 0",
    "_ . _ 1 _ 0 _ 0 _ 1 _ 1 _ 1 _ 0 _ 1 _ 1 _ 1 _ 1 _ 0 _ 1 _ 1 _ 1 _ 0",
    ". _ 1 _ 0 _ 0 _ 0 _ 1 _ 1 _ 0 _ 0 _ 1 _ 1 _ 1 _ 0 _ 0 _ 1 _ 1 _ 0",
    "_ 1 _ (0) _ 0 _ 0 _ 0 _ 1 _ (1) _ 0 _ (0) _ 1 _ 1 _ 0 _ 0 _ (0) _ 1 _ (0)",
    "((1)) _ (0) _ 0 _ 0 _ (0) _ 0 _ 1 _ (0) _ (0) _ 0 _ 1 _ (0) _ 0 _ 0 _ (0) _ (1)",
];

pub const I31_R: [&str; 8] = [
    "_ . _ . _ . _ 1 _ 0 _ 0 _ 1 _ 0 _ 1 _ 0 _ 0 _ 1 _ 0",
    ". _ . _ . _ 1 _ 1 _ 0 _ 1 _ 1 _ 1 _ 1 _ 0 _ 1 _ 1 _ 0",
    ". . . . . 1 1 1 0 1 1 1 0 1 1 2 1 1 0 1 1 1 0 1 1 1 0 0",
    ". _ . _ 1 _ 0 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 1 _ 0 _ 1 _ 0",
    "_ . _ 1 _ 0 _ 0 _ 1 _ 1 _ 1 _ 0 _ 1 _ 1 _ 1 _ 0 _ 0 _ 1 _ 0",
    ". _ 1 _ 0 _ 0 _ 0 _ 1 _ 1 _ 0 _ 0 _ 1 _ 1 _ 0 _ 0 _ 0 _ 1 _ 0",
    "_ 1 _ 0 _ 0 _ 0 _ 0 _ 1 _ 0 _ 0 _ 0 _ 1 _ 0 _ 0 _ 0 _ 0 _ 1 _ 0",
    "((1)) _ 0 _ 0 _ 0 _ 0 _ 0 _ (1) _ 0 _ 0 _ 0 _ (1) _ 0 _ (0) _ 0 _ 0 _ (1) _ 0",
];

/// Entries `a*b + c` of the three symbolic arrays that knit out of `M` for
/// `I_{30(b-2)+1}`, as `(position, row, a, c, circled)`: the position counts
/// steps across the three arrays, the row is counted from the top.
pub const SYMBOLIC_M: [(i64, usize, i64, i64, bool); 264] = [
    (0, 0, 2, -6, false),
    (2, 0, 2, -6, false),
    (4, 0, 2, -6, false),
    (6, 0, 2, -5, false),
    (8, 0, 1, -3, false),
    (10, 0, 2, -6, false),
    (12, 0, 2, -5, false),
    (14, 0, 1, -3, false),
    (16, 0, 2, -5, false),
    (18, 0, 1, -2, false),
    (1, 1, 4, -12, false),
    (3, 1, 4, -12, false),
    (5, 1, 4, -11, false),
    (7, 1, 3, -8, false),
    (9, 1, 3, -9, false),
    (11, 1, 4, -11, false),
    (13, 1, 3, -8, false),
    (15, 1, 3, -8, false),
    (17, 1, 3, -7, false),
    (19, 1, 2, -5, false),
    (0, 2, 6, -18, false),
    (1, 2, 3, -9, false),
    (2, 2, 6, -18, false),
    (3, 2, 3, -9, false),
    (4, 2, 6, -17, false),
    (5, 2, 3, -8, false),
    (6, 2, 5, -14, false),
    (7, 2, 2, -6, false),
    (8, 2, 5, -14, false),
    (9, 2, 3, -8, false),
    (10, 2, 5, -14, false),
    (11, 2, 2, -6, false),
    (12, 2, 5, -14, false),
    (13, 2, 3, -8, false),
    (14, 2, 5, -13, false),
    (15, 2, 2, -5, false),
    (16, 2, 4, -10, false),
    (17, 2, 2, -5, false),
    (18, 2, 4, -10, false),
    (19, 2, 2, -5, false),
    (1, 3, 5, -15, false),
    (3, 3, 5, -14, false),
    (5, 3, 4, -12, false),
    (7, 3, 5, -14, false),
    (9, 3, 4, -11, false),
    (11, 3, 4, -11, false),
    (13, 3, 4, -11, false),
    (15, 3, 4, -10, false),
    (17, 3, 3, -8, false),
    (19, 3, 4, -10, false),
    (0, 4, 4, -12, false),
    (2, 4, 4, -11, false),
    (4, 4, 3, -9, false),
    (6, 4, 4, -12, false),
    (8, 4, 4, -11, false),
    (10, 4, 3, -8, false),
    (12, 4, 3, -8, false),
    (14, 4, 3, -8, false),
    (16, 4, 3, -8, false),
    (18, 4, 3, -8, false),
    (1, 5, 3, -8, false),
    (3, 5, 2, -6, false),
    (5, 5, 3, -9, false),
    (7, 5, 3, -9, false),
    (9, 5, 3, -8, false),
    (11, 5, 2, -5, false),
    (13, 5, 2, -5, false),
    (15, 5, 2, -6, false),
    (17, 5, 3, -8, false),
    (19, 5, 2, -5, false),
    (0, 6, 2, -5, false),
    (2, 6, 1, -3, false),
    (4, 6, 2, -6, false),
    (6, 6, 2, -6, false),
    (8, 6, 2, -6, false),
    (10, 6, 2, -5, false),
    (12, 6, 1, -2, false),
    (14, 6, 1, -3, false),
    (16, 6, 2, -6, false),
    (18, 6, 2, -5, false),
    (1, 7, 1, -3, false),
    (3, 7, 1, -3, false),
    (5, 7, 1, -3, false),
    (7, 7, 1, -3, false),
    (9, 7, 1, -3, false),
    (11, 7, 1, -2, false),
    (13, 7, 0, 0, false),
    (15, 7, 1, -3, false),
    (17, 7, 1, -3, false),
    (19, 7, 1, -2, false),
    (20, 0, 1, -3, false),
    (22, 0, 2, -5, false),
    (24, 0, 1, -2, false),
    (26, 0, 1, -2, false),
    (28, 0, 1, -2, false),
    (30, 0, 1, -2, false),
    (32, 0, 1, -2, false),
    (34, 0, 1, -2, false),
    (36, 0, 1, -1, false),
    (38, 0, 0, 0, false),
    (21, 1, 3, -8, false),
    (23, 1, 3, -7, false),
    (25, 1, 2, -4, false),
    (27, 1, 2, -4, false),
    (29, 1, 2, -4, false),
    (31, 1, 2, -4, false),
    (33, 1, 2, -4, false),
    (35, 1, 2, -3, false),
    (37, 1, 1, -1, false),
    (39, 1, 1, -2, false),
    (20, 2, 4, -10, false),
    (21, 2, 2, -5, false),
    (22, 2, 4, -10, false),
    (23, 2, 2, -5, false),
    (24, 2, 4, -9, false),
    (25, 2, 2, -4, false),
    (26, 2, 3, -6, false),
    (27, 2, 1, -2, false),
    (28, 2, 3, -6, false),
    (29, 2, 2, -4, false),
    (30, 2, 3, -6, false),
    (31, 2, 1, -2, false),
    (32, 2, 3, -6, false),
    (33, 2, 2, -4, false),
    (34, 2, 3, -5, false),
    (35, 2, 1, -1, false),
    (36, 2, 2, -3, false),
    (37, 2, 1, -2, false),
    (38, 2, 2, -3, false),
    (39, 2, 1, -1, false),
    (21, 3, 3, -7, false),
    (23, 3, 3, -7, false),
    (25, 3, 3, -7, false),
    (27, 3, 3, -6, false),
    (29, 3, 2, -4, false),
    (31, 3, 3, -6, false),
    (33, 3, 2, -3, false),
    (35, 3, 2, -4, false),
    (37, 3, 2, -3, false),
    (39, 3, 2, -3, false),
    (20, 4, 3, -7, false),
    (22, 4, 2, -4, false),
    (24, 4, 2, -5, false),
    (26, 4, 3, -7, false),
    (28, 4, 2, -4, false),
    (30, 4, 2, -4, false),
    (32, 4, 2, -3, false),
    (34, 4, 1, -2, false),
    (36, 4, 2, -4, false),
    (38, 4, 2, -3, false),
    (21, 5, 2, -4, false),
    (23, 5, 1, -2, false),
    (25, 5, 2, -5, false),
    (27, 5, 2, -5, false),
    (29, 5, 2, -4, false),
    (31, 5, 1, -1, false),
    (33, 5, 1, -2, false),
    (35, 5, 1, -2, false),
    (37, 5, 2, -4, false),
    (39, 5, 1, -1, false),
    (20, 6, 1, -2, false),
    (22, 6, 1, -2, false),
    (24, 6, 1, -2, false),
    (26, 6, 1, -3, false),
    (28, 6, 2, -5, false),
    (30, 6, 1, -1, false),
    (32, 6, 0, 0, false),
    (34, 6, 1, -2, false),
    (36, 6, 1, -2, false),
    (38, 6, 1, -2, false),
    (21, 7, 0, 0, false),
    (23, 7, 1, -2, false),
    (25, 7, 0, 0, false),
    (27, 7, 1, -3, false),
    (29, 7, 1, -2, false),
    (31, 7, 0, 1, false),
    (33, 7, 0, 0, false),
    (35, 7, 1, -2, false),
    (37, 7, 0, 0, false),
    (39, 7, 1, -2, false),
    (40, 0, 1, -2, false),
    (42, 0, 1, -1, false),
    (44, 0, 0, 0, false),
    (46, 0, 1, -1, false),
    (48, 0, 0, 0, false),
    (50, 0, 0, 0, false),
    (52, 0, 1, -1, false),
    (54, 0, 0, 0, false),
    (41, 1, 2, -3, false),
    (43, 1, 1, -1, false),
    (45, 1, 1, -1, false),
    (47, 1, 1, -1, false),
    (49, 1, 0, 0, false),
    (51, 1, 1, -1, false),
    (53, 1, 1, -1, false),
    (55, 1, 0, 0, false),
    (40, 2, 2, -3, false),
    (41, 2, 1, -2, false),
    (42, 2, 2, -3, false),
    (43, 2, 1, -1, false),
    (44, 2, 2, -2, false),
    (45, 2, 1, -1, false),
    (46, 2, 1, -1, false),
    (47, 2, 0, 0, false),
    (48, 2, 1, -1, false),
    (49, 2, 1, -1, false),
    (50, 2, 1, -1, false),
    (51, 2, 0, 0, false),
    (52, 2, 1, -1, false),
    (53, 2, 1, -1, false),
    (54, 2, 1, -1, false),
    (55, 2, 0, 0, false),
    (56, 2, 0, 0, false),
    (41, 3, 1, -1, false),
    (43, 3, 2, -3, false),
    (45, 3, 1, -1, false),
    (47, 3, 1, -1, false),
    (49, 3, 1, -1, false),
    (51, 3, 1, -1, false),
    (53, 3, 0, 0, false),
    (55, 3, 1, -1, false),
    (57, 3, 0, 0, false),
    (40, 4, 1, -1, false),
    (42, 4, 1, -1, false),
    (44, 4, 1, -2, false),
    (46, 4, 1, -1, false),
    (48, 4, 1, -1, false),
    (50, 4, 1, -1, false),
    (52, 4, 0, 0, false),
    (54, 4, 0, 0, false),
    (56, 4, 1, -1, false),
    (58, 4, 0, 0, false),
    (41, 5, 1, -1, false),
    (43, 5, 0, 0, false),
    (45, 5, 1, -2, false),
    (47, 5, 1, -1, false),
    (49, 5, 1, -1, false),
    (51, 5, 0, 0, false),
    (53, 5, 0, 0, false),
    (55, 5, 0, 0, false),
    (57, 5, 1, -1, false),
    (59, 5, 0, 0, false),
    (40, 6, 1, -1, false),
    (42, 6, 0, 0, false),
    (44, 6, 0, 0, false),
    (46, 6, 1, -2, false),
    (48, 6, 1, -1, false),
    (50, 6, 0, 0, false),
    (52, 6, 0, 0, false),
    (54, 6, 0, 0, false),
    (56, 6, 0, 0, false),
    (58, 6, 1, -1, false),
    (60, 6, 0, 0, false),
    (41, 7, 0, 1, false),
    (43, 7, 0, 0, false),
    (45, 7, 0, 0, false),
    (47, 7, 1, -2, false),
    (49, 7, 0, 1, false),
    (51, 7, 0, 0, false),
    (53, 7, 0, 0, false),
    (55, 7, 0, 0, false),
    (57, 7, 0, 0, false),
    (59, 7, 1, -1, false),
    (61, 7, 0, 0, false),
];
