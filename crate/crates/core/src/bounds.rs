//! Palette sizes as functions of the maximum degree.

/// Colors sufficient for any greedy order: 2Δ² − 2Δ + 1.
pub fn greedy_bound(max_degree: usize) -> usize {
    let d = max_degree;
    2 * d * d - 2 * d + 1
}

/// Colors used by the root-compatible partial greedy and by the low-degree
/// root completion: 2Δ² − 3Δ + 1 (zero below Δ = 2).
pub fn partial_bound(max_degree: usize) -> usize {
    let d = max_degree;
    (2 * d * d + 1).saturating_sub(3 * d)
}

/// Colors sufficient for Δ-regular graphs of girth at least five:
/// 2Δ² − 3Δ + 2.
pub fn girth_five_bound(max_degree: usize) -> usize {
    let d = max_degree;
    (2 * d * d + 2).saturating_sub(3 * d)
}

/// Colors sufficient for every graph of maximum degree five.
pub const DELTA_FIVE_BOUND: usize = 37;

/// Edge count of the extremal C5 blowup, 5Δ²/4 for even Δ and
/// (5Δ² − 2Δ + 1)/4 for odd Δ. Believed (not proven) to be the true maximum
/// of the strong chromatic index; reported for comparison only.
pub fn reference_bound(max_degree: usize) -> usize {
    let d = max_degree;
    if d.is_multiple_of(2) {
        5 * d * d / 4
    } else {
        (5 * d * d + 1 - 2 * d) / 4
    }
}
