//! Reference values for regression checks.

/// `p_n(x, y, z)` in base 2 for n = 0..=7, with the coefficient sums.
pub const P_TABLE: [(&str, u64); 8] = [
    ("1", 1),
    ("x+y", 2),
    ("xy+x+y+z", 4),
    ("x^2+2xy+xz+y^2", 5),
    ("x^2y+xy^2+xy+xz+yz+x+y+z", 8),
    ("x^2y+x^2z+xy^2+xyz+x^2+2xy+xz+y^2+yz", 10),
    ("x^2y^2+x^2y+xy^2+2xyz+x^2+2xy+2xz+y^2+yz+z^2", 13),
    ("x^3+3x^2y+2x^2z+x^2yz+3xy^2+2xyz+xz^2+y^3", 14),
];

/// `(Q_n(x), R_n(x))` for n = 0..=5.
pub const QX_RX_TABLE: [(&str, &str); 6] = [
    ("1", "1"),
    ("2x+2", "x+1"),
    ("3x^2+7x+3", "x^2+3x+1"),
    ("4x^3+16x^2+16x+4", "x^3+6x^2+6x+1"),
    ("5x^4+30x^3+51x^2+30x+5", "x^4+10x^3+19x^2+10x+1"),
    (
        "6x^5+50x^4+126x^3+126x^2+50x+6",
        "x^5+15x^4+45x^3+45x^2+15x+1",
    ),
];

/// `(Q_n(z), R_n(z))` on the diagonal `x = y = z`, n = 0..=5.
pub const DIAGONAL_TABLE: [(&str, &str); 6] = [
    ("1", "1"),
    ("z^2+3z", "2z"),
    ("z^4+4z^3+8z^2", "5z^2"),
    ("z^6+5z^5+13z^4+21z^3", "z^4+13z^3"),
    ("z^8+6z^7+19z^6+40z^5+55z^4", "z^6+6z^5+34z^4"),
    (
        "z^10+7z^9+26z^8+66z^7+120z^6+144z^5",
        "z^8+7z^7+25z^6+89z^5",
    ),
];

/// `Q_n(1, z, z)` for n = 0..=5 and its factorization; an empty list
/// marks a polynomial listed as irreducible.
pub const Q1_ZZ_TABLE: [(&str, &[&str]); 6] = [
    ("1", &[]),
    ("3z+1", &[]),
    ("7z^2+5z+1", &[]),
    ("15z^3+17z^2+7z+1", &["3z+1", "5z^2+4z+1"]),
    ("31z^4+49z^3+31z^2+9z+1", &[]),
    (
        "63z^5+129z^4+111z^3+49z^2+11z+1",
        &["3z+1", "3z^2+3z+1", "7z^2+5z+1"],
    ),
];

/// `Q_n(1, z, z²)` for n = 0..=5.
pub const Q1_ZZ2_TABLE: [&str; 6] = [
    "1",
    "z^2+2z+1",
    "z^4+3z^3+5z^2+3z+1",
    "z^6+4z^5+9z^4+12z^3+9z^2+4z+1",
    "z^8+5z^7+14z^6+25z^5+31z^4+25z^3+14z^2+5z+1",
    "z^10+6z^9+20z^8+44z^7+70z^6+82z^5+70z^4+44z^3+20z^2+6z+1",
];

/// Number of 2-restricted binary overpartitions of n, n = 0..=10.
pub const COUNT_SERIES_B2: [u64; 11] = [1, 2, 4, 5, 8, 10, 13, 14, 18, 21, 26];
