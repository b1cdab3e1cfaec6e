//! Published figures the solver is checked against.

/// Rows of the one-roll table: `(fives, ones, triple, combinations, score, [f(1)..f(5)])`.
/// The first row is the non-scoring outcome.
pub const FREQUENCY_ROWS: [(u8, u8, u8, u8, u32, [u32; 5]); 45] = [
    (0, 0, 0, 0, 0, [4, 16, 60, 204, 600]),
    (1, 0, 0, 1, 1, [1, 8, 48, 240, 1020]),
    (0, 1, 0, 1, 2, [1, 8, 48, 240, 1020]),
    (2, 0, 0, 2, 2, [0, 1, 12, 96, 600]),
    (1, 1, 0, 2, 3, [0, 2, 24, 192, 1200]),
    (0, 2, 0, 2, 4, [0, 1, 12, 96, 600]),
    (3, 0, 0, 3, 10, [0, 0, 1, 16, 160]),
    (2, 1, 0, 3, 4, [0, 0, 3, 48, 480]),
    (1, 2, 0, 3, 5, [0, 0, 3, 48, 480]),
    (0, 3, 0, 3, 20, [0, 0, 1, 16, 160]),
    (0, 0, 2, 1, 4, [0, 0, 1, 13, 106]),
    (0, 0, 3, 1, 6, [0, 0, 1, 13, 106]),
    (0, 0, 4, 1, 8, [0, 0, 1, 13, 106]),
    (0, 0, 6, 1, 12, [0, 0, 1, 13, 106]),
    (4, 0, 0, 4, 11, [0, 0, 0, 1, 20]),
    (3, 1, 0, 4, 12, [0, 0, 0, 4, 80]),
    (2, 2, 0, 4, 6, [0, 0, 0, 6, 120]),
    (1, 3, 0, 4, 21, [0, 0, 0, 4, 80]),
    (0, 4, 0, 4, 22, [0, 0, 0, 1, 20]),
    (1, 0, 2, 2, 5, [0, 0, 0, 4, 65]),
    (1, 0, 3, 2, 7, [0, 0, 0, 4, 65]),
    (1, 0, 4, 2, 9, [0, 0, 0, 4, 65]),
    (1, 0, 6, 2, 13, [0, 0, 0, 4, 65]),
    (0, 1, 2, 2, 6, [0, 0, 0, 4, 65]),
    (0, 1, 3, 2, 8, [0, 0, 0, 4, 65]),
    (0, 1, 4, 2, 10, [0, 0, 0, 4, 65]),
    (0, 1, 6, 2, 14, [0, 0, 0, 4, 65]),
    (5, 0, 0, 5, 12, [0, 0, 0, 0, 1]),
    (4, 1, 0, 5, 13, [0, 0, 0, 0, 5]),
    (3, 2, 0, 5, 14, [0, 0, 0, 0, 10]),
    (2, 3, 0, 5, 22, [0, 0, 0, 0, 10]),
    (1, 4, 0, 5, 23, [0, 0, 0, 0, 5]),
    (0, 5, 0, 5, 24, [0, 0, 0, 0, 1]),
    (2, 0, 2, 3, 6, [0, 0, 0, 0, 10]),
    (2, 0, 3, 3, 8, [0, 0, 0, 0, 10]),
    (2, 0, 4, 3, 10, [0, 0, 0, 0, 10]),
    (2, 0, 6, 3, 14, [0, 0, 0, 0, 10]),
    (1, 1, 2, 3, 7, [0, 0, 0, 0, 20]),
    (1, 1, 3, 3, 9, [0, 0, 0, 0, 20]),
    (1, 1, 4, 3, 11, [0, 0, 0, 0, 20]),
    (1, 1, 6, 3, 15, [0, 0, 0, 0, 20]),
    (0, 2, 2, 3, 8, [0, 0, 0, 0, 10]),
    (0, 2, 3, 3, 10, [0, 0, 0, 0, 10]),
    (0, 2, 4, 3, 12, [0, 0, 0, 0, 10]),
    (0, 2, 6, 3, 16, [0, 0, 0, 0, 10]),
];

/// Printed value table, one row per chip count `0..56`, in column order
/// n=5, n=4, n=3 `[2,0,0]|[1,1,0]`, `[0,2,0]`, other, n=2 `[2,1,0]`, `[1,2,0]`,
/// `[2,0,0]|[1,1,0]`. Blank means stop, `--` unreachable.
pub const VALUE_TABLE: [[&str; 8]; 56] = [
    ["5.8721", "--", "--", "--", "--", "--", "--", "--"],
    ["6.607", "4.338", "--", "--", "--", "--", "--", "--"],
    ["7.355", "5.021", "4.338", "--", "3.447", "--", "--", "--"],
    ["8.107", "5.743", "5.021", "--", "4.123", "--", "--", "3.447"],
    ["8.883", "6.476", "5.743", "5.021", "4.837", "5.021", "--", "4.123"],
    ["9.713", "7.212", "6.476", "5.743", "5.552", "5.743", "5.021", ""],
    ["10.553", "8.001", "7.212", "6.476", "6.266", "6.476", "", ""],
    ["11.394", "8.840", "8.001", "7.212", "", "7.212", "", ""],
    ["12.235", "9.679", "8.840", "8.001", "", "8.001", "", ""],
    ["13.077", "10.517", "9.679", "", "", "", "", ""],
    ["13.918", "11.357", "10.517", "", "", "", "", ""],
    ["14.779", "12.196", "11.357", "", "", "", "", ""],
    ["15.655", "13.035", "12.196", "", "", "", "", ""],
    ["16.534", "13.875", "13.035", "", "", "", "", ""],
    ["17.413", "14.715", "", "", "", "", "", ""],
    ["18.291", "15.554", "", "", "", "", "", ""],
    ["19.170", "16.394", "", "", "", "", "", ""],
    ["20.060", "17.234", "", "", "", "", "", ""],
    ["20.972", "18.073", "", "", "", "", "", ""],
    ["21.893", "", "", "", "", "", "", ""],
    ["22.814", "", "", "", "", "", "", ""],
    ["23.734", "", "", "", "", "", "", ""],
    ["24.655", "", "", "", "", "", "", ""],
    ["25.576", "", "", "", "", "", "", ""],
    ["26.497", "", "", "", "", "", "", ""],
    ["27.418", "", "", "", "", "", "", ""],
    ["28.339", "", "", "", "", "", "", ""],
    ["29.260", "", "", "", "", "", "", ""],
    ["30.181", "", "", "", "", "", "", ""],
    ["31.102", "", "", "", "", "", "", ""],
    ["32.022", "", "", "", "", "", "", ""],
    ["32.943", "", "", "", "", "", "", ""],
    ["33.864", "", "", "", "", "", "", ""],
    ["34.785", "", "", "", "", "", "", ""],
    ["35.706", "", "", "", "", "", "", ""],
    ["36.627", "", "", "", "", "", "", ""],
    ["37.548", "", "", "", "", "", "", ""],
    ["38.469", "", "", "", "", "", "", ""],
    ["39.390", "", "", "", "", "", "", ""],
    ["40.312", "", "", "", "", "", "", ""],
    ["41.233", "", "", "", "", "", "", ""],
    ["42.154", "", "", "", "", "", "", ""],
    ["43.075", "", "", "", "", "", "", ""],
    ["43.997", "", "", "", "", "", "", ""],
    ["44.919", "", "", "", "", "", "", ""],
    ["45.840", "", "", "", "", "", "", ""],
    ["46.762", "", "", "", "", "", "", ""],
    ["47.684", "", "", "", "", "", "", ""],
    ["48.607", "", "", "", "", "", "", ""],
    ["49.529", "", "", "", "", "", "", ""],
    ["50.452", "", "", "", "", "", "", ""],
    ["51.375", "", "", "", "", "", "", ""],
    ["52.298", "", "", "", "", "", "", ""],
    ["53.221", "", "", "", "", "", "", ""],
    ["54.144", "", "", "", "", "", "", ""],
    ["55.066", "", "", "", "", "", "", ""],
];

/// Printed action row under the value table.
pub const ACTION_ROW: [&str; 8] = ["r", "r", "m5", "m1", "r", "m55", "m51", "r"];

/// Printed values of the restricted games, by the moves added to `{s, r}`.
pub const RESTRICTED_VALUES: [(&str, &str); 6] = [
    ("s,r", "5.5763262782"),
    ("s,r,m5", "5.8012180037"),
    ("s,r,m5,m1", "5.8153340639"),
    ("s,r,m5,m1,m55", "5.8707484326"),
    ("s,r,m5,m1,m55,m51", "5.8720189185"),
    ("all", "5.8720189185"),
];

pub const GAME_VALUE: &str = "5.8720189185";
pub const STOPPING_THRESHOLD: u32 = 56;
pub const PIG_THRESHOLD: u32 = 20;
pub const PIG_VALUE: &str = "8.14";
