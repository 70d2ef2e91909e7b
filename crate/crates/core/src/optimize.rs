//! Derivative-free 2-D simplex (Nelder-Mead) minimizer for the discord search.
//!
//! Deliberately small: two parameters, smooth periodic objectives, no bounds
//! (the measurement angles are well-defined for any real input).

/// Outcome of one simplex descent.
#[derive(Debug, Clone, Copy)]
pub struct SimplexResult {
    pub x: [f64; 2],
    pub fx: f64,
    pub evals: usize,
}

/// Minimize `f` starting from `start`, with an axis-aligned initial simplex of
/// side `scale`. Stops when the simplex's function spread drops below `ftol`
/// or after `max_evals` objective evaluations.
pub fn nelder_mead_2d(
    mut f: impl FnMut(&[f64; 2]) -> f64,
    start: [f64; 2],
    scale: f64,
    ftol: f64,
    max_evals: usize,
) -> SimplexResult {
    const ALPHA: f64 = 1.0; // reflection
    const GAMMA: f64 = 2.0; // expansion
    const RHO: f64 = 0.5; // contraction
    const SIGMA: f64 = 0.5; // shrink

    let mut evals = 0usize;
    let mut eval = |p: &[f64; 2], evals: &mut usize| {
        *evals += 1;
        f(p)
    };

    let mut pts = [
        start,
        [start[0] + scale, start[1]],
        [start[0], start[1] + scale],
    ];
    let mut vals = [
        eval(&pts[0], &mut evals),
        eval(&pts[1], &mut evals),
        eval(&pts[2], &mut evals),
    ];

    while evals < max_evals {
        // order best -> worst
        let mut order = [0usize, 1, 2];
        order.sort_by(|&i, &j| vals[i].partial_cmp(&vals[j]).expect("finite objective"));
        let (best, mid, worst) = (order[0], order[1], order[2]);

        if (vals[worst] - vals[best]).abs() <= ftol {
            break;
        }

        let centroid = [
            0.5 * (pts[best][0] + pts[mid][0]),
            0.5 * (pts[best][1] + pts[mid][1]),
        ];
        let dir = [centroid[0] - pts[worst][0], centroid[1] - pts[worst][1]];
        let reflected = [centroid[0] + ALPHA * dir[0], centroid[1] + ALPHA * dir[1]];
        let fr = eval(&reflected, &mut evals);

        if fr < vals[best] {
            let expanded = [centroid[0] + GAMMA * dir[0], centroid[1] + GAMMA * dir[1]];
            let fe = eval(&expanded, &mut evals);
            if fe < fr {
                pts[worst] = expanded;
                vals[worst] = fe;
            } else {
                pts[worst] = reflected;
                vals[worst] = fr;
            }
        } else if fr < vals[mid] {
            pts[worst] = reflected;
            vals[worst] = fr;
        } else {
            let contracted = if fr < vals[worst] {
                [centroid[0] + RHO * dir[0], centroid[1] + RHO * dir[1]]
            } else {
                [centroid[0] - RHO * dir[0], centroid[1] - RHO * dir[1]]
            };
            let fc = eval(&contracted, &mut evals);
            if fc < vals[worst].min(fr) {
                pts[worst] = contracted;
                vals[worst] = fc;
            } else {
                // shrink toward the best vertex
                for i in [mid, worst] {
                    pts[i] = [
                        pts[best][0] + SIGMA * (pts[i][0] - pts[best][0]),
                        pts[best][1] + SIGMA * (pts[i][1] - pts[best][1]),
                    ];
                    vals[i] = eval(&pts[i], &mut evals);
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..3 {
        if vals[i] < vals[best] {
            best = i;
        }
    }
    SimplexResult {
        x: pts[best],
        fx: vals[best],
        evals,
    }
}
