//! Expected values, transcribed once. Rows are n = 1..9, columns s = 0..9.

pub const D: [[u64; 10]; 9] = [
    [0, 1, 4, 4, 4, 4, 4, 4, 4, 4],
    [0, 4, 13, 16, 16, 16, 16, 16, 16, 16],
    [0, 9, 42, 61, 64, 64, 64, 64, 64, 64],
    [0, 36, 148, 228, 253, 256, 256, 256, 256, 256],
    [0, 100, 500, 845, 990, 1021, 1024, 1024, 1024, 1024],
    [0, 400, 1825, 3160, 3846, 4056, 4093, 4096, 4096, 4096],
    [0, 1225, 6370, 11711, 14868, 16051, 16338, 16381, 16384, 16384],
    [0, 4900, 23716, 44100, 57428, 63308, 65108, 65484, 65533, 65536],
    [0, 15876, 84672, 164304, 221004, 249012, 259008, 261609, 262086, 262141],
];

pub const B: [[u64; 10]; 9] = [
    [2, 3, 0, 0, 0, 0, 0, 0, 0, 0],
    [6, 10, 3, 0, 0, 0, 0, 0, 0, 0],
    [20, 41, 20, 3, 0, 0, 0, 0, 0, 0],
    [70, 146, 90, 26, 3, 0, 0, 0, 0, 0],
    [252, 572, 412, 157, 32, 3, 0, 0, 0, 0],
    [924, 2108, 1673, 778, 224, 38, 3, 0, 0, 0],
    [3432, 8213, 7072, 3733, 1304, 303, 44, 3, 0, 0],
    [12870, 30850, 28050, 16402, 6714, 1954, 394, 50, 3, 0],
    [48620, 120260, 115112, 72608, 33044, 11156, 2792, 497, 56, 3],
];

/// Dimensions of the symplectic blob algebra for n = 1..9.
pub const P: [u64; 9] = [5, 19, 84, 335, 1428, 5748, 24104, 97287, 404148];
