#![allow(dead_code)]

use rothlab::{Biadjacency, CompositeInstance, Graph};

/// Printed census examples over `G = K_4`, `s = 7`.
pub struct Golden {
    pub k: [[u8; 7]; 4],
    pub mu: f64,
}

pub const EXAMPLE_1: Golden = Golden {
    k: [[1, 1, 1, 1, 0, 0, 0], [1, 1, 1, 1, 0, 0, 0], [1, 1, 1, 1, 0, 0, 0], [1, 1, 1, 1, 1, 1, 1]],
    mu: 0.63226,
};
pub const EXAMPLE_2: Golden = Golden {
    k: [[1, 1, 1, 1, 1, 0, 0], [1, 1, 1, 0, 0, 1, 1], [1, 1, 0, 1, 1, 1, 0], [1, 1, 1, 1, 0, 1, 0]],
    mu: 0.82028,
};
pub const EXAMPLE_3: Golden = Golden {
    k: [[1, 1, 1, 0, 0, 0, 0], [1, 0, 0, 1, 1, 0, 0], [1, 0, 0, 0, 0, 1, 1], [1, 1, 1, 1, 1, 1, 1]],
    mu: 1.0922,
};
pub const EXAMPLE_4: Golden = Golden {
    k: [[1, 1, 0, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0, 0], [1, 0, 1, 0, 1, 0, 0], [1, 1, 1, 1, 1, 1, 1]],
    mu: 0.67234,
};

pub const EXAMPLE_1_Q_MU: [[f64; 4]; 4] = [
    [5.8123, -0.18774, -0.18774, -0.18774],
    [-0.18774, 5.8123, -0.18774, -0.18774],
    [-0.18774, -0.18774, 5.8123, -0.18774],
    [-0.18774, -0.18774, -0.18774, 0.65427],
];
/// T entries then S entries.
pub const EXAMPLE_1_X: [f64; 11] =
    [0.008, 0.008, 0.008, 0.2057, -0.0682, -0.0682, -0.0682, -0.0682, -0.5594, -0.5594, -0.5594];

pub const EXAMPLE_2_Q_MU: [[f64; 4]; 4] = [
    [5.6058, -0.08776, -0.93542, -0.54653],
    [-0.08776, 0.88934, -0.08776, -0.54653],
    [-0.93542, -0.08776, 5.6058, -0.54653],
    [-0.54653, -0.54653, -0.54653, 5.9947],
];

pub const EXAMPLE_3_Q_MU: [[f64; 4]; 4] = [
    [3.453, 0.6561, 0.6561, -1.547],
    [0.6561, 3.453, 0.6561, -1.547],
    [0.6561, 0.6561, 3.453, -1.547],
    [-1.547, -1.547, -1.547, 3.0468],
];
pub const EXAMPLE_3_Q_MU_INV: [[f64; 4]; 4] = [
    [0.37674, 0.019201, 0.019201, 0.21078],
    [0.019201, 0.37674, 0.019201, 0.21078],
    [0.019201, 0.019201, 0.37674, 0.21078],
    [0.21078, 0.21078, 0.21078, 0.64927],
];

pub const EXAMPLE_4_Q_MU: [[f64; 4]; 4] = [
    [3.8172, 1.0, 0.57038, -0.18282],
    [1.0, 3.8172, 0.57038, -0.18282],
    [0.57038, 0.57038, 4.3876, -0.61244],
    [-0.18282, -0.18282, -0.61244, 0.77727],
];
pub const EXAMPLE_4_W: [f64; 4] = [0.0047565, 0.0047565, 0.033593, 0.21264];

pub fn instance(ex: &Golden) -> CompositeInstance {
    let k = Biadjacency::from_rows(&ex.k).expect("printed K is 0/1");
    CompositeInstance::compose(7, &Graph::complete(4), Some(&k)).expect("printed examples are valid")
}

/// `K̄_4 ∨ K_{4,2}`: the join example with `μ = t − s = 2`.
pub fn join_example() -> CompositeInstance {
    CompositeInstance::compose(4, &Graph::complete_bipartite(4, 2), None).unwrap()
}

pub fn max_abs_diff<const N: usize>(m: &rothlab::SymMat, printed: &[[f64; N]; N]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in printed.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            worst = worst.max((m[(i, j)] - v).abs());
        }
    }
    worst
}

/// Largest entry difference after scaling `x` to best match `printed` in
/// least squares (the printed vector fixes sign and norm only loosely).
pub fn scaled_diff(x: &[f64], printed: &[f64]) -> f64 {
    let c = x.iter().zip(printed).map(|(a, b)| a * b).sum::<f64>() / x.iter().map(|a| a * a).sum::<f64>();
    x.iter().zip(printed).map(|(a, b)| (c * a - b).abs()).fold(0.0, f64::max)
}
