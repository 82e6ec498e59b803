//! Shared workloads for the benchmarks.

use knotlab::{lambda_diagram, LambdaSpec, PlanarDiagram};

/// λ diagrams of increasing size, labelled for the report.
pub fn lambda_workloads() -> Vec<(String, PlanarDiagram)> {
    [(0, 0, 3), (6, 0, 3), (0, 0, 5), (6, 6, 3), (4, 4, 5)]
        .into_iter()
        .map(|(n, m, p)| {
            let spec = LambdaSpec::new(n, m, p).expect("valid spec");
            (
                spec.to_string(),
                lambda_diagram(spec).expect("within crossing cap"),
            )
        })
        .collect()
}

/// Standard PD codes for small knots.
pub fn small_knots() -> Vec<(&'static str, PlanarDiagram)> {
    [
        ("3_1", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"),
        ("4_1", "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"),
        ("5_1", "X[1,6,2,7] X[3,8,4,9] X[5,10,6,1] X[7,2,8,3] X[9,4,10,5]"),
    ]
    .into_iter()
    .map(|(name, pd)| (name, pd.parse().expect("valid PD")))
    .collect()
}
