use crate::laurent::VarAlphabet;
use crate::{CycNum, Poly};

fn canonical(src: &str) -> Poly {
    Poly::parse_canonical(src).expect("builder text parses")
}

fn product(alphabet: &VarAlphabet, factors: impl IntoIterator<Item = Poly>) -> Poly {
    factors.into_iter().fold(Poly::constant(alphabet, CycNum::from(1)), |acc, f| &acc * &f)
}

fn shift_product(shifts: impl Iterator<Item = i64>) -> Poly {
    let alphabet = VarAlphabet::canonical();
    product(&alphabet, shifts.map(|i| canonical(&format!("a - a' + ({i})"))))
}

/// `∏_{i ∈ [−X, X] ∩ Z} (a − a' + i)`.
pub fn distance_polynomial(x: f64) -> Poly {
    let r = if x >= 0.0 { x.floor() as i64 } else { -1 };
    shift_product(-r..=r)
}

/// `∏ (a − a' + i)` over integers `i` of height `max(|i|, 1) < X`.
pub fn height_polynomial(x: f64) -> Poly {
    let r = (x.ceil() as i64 - 1).max(0);
    shift_product((-r..=r).filter(move |i| (i.abs().max(1) as f64) < x))
}

/// `Σ_i (x_i²/s + s/x_i²) + x1x2/s + x1/x2 + x2/x1 + s/(x1x2)` minus the
/// same expression in the primed variables; vanishes exactly when
/// `λ_{p²} = λ'_{p²}` for trivial characters.
pub fn lambda_p2_polynomial() -> Poly {
    let side = |p: &str| {
        let (s, x1, x2) = (format!("s{p}"), format!("x1{p}"), format!("x2{p}"));
        format!(
            "({x1}^2/{s} + {s}/{x1}^2 + {x2}^2/{s} + {s}/{x2}^2 + {x1}*{x2}/{s} + {x1}/{x2} + {x2}/{x1} + {s}/({x1}*{x2}))"
        )
    };
    canonical(&format!("{} - {}", side(""), side("'")))
}

/// Invariant factors whose product vanishes exactly when two of `x1, x2, s/x1,
/// s/x2, x1', x2', s'/x1', s'/x2'` coincide: the squared differences within
/// each side and the cross differences. Squaring makes the one-sided factors
/// invariant under `x_i ↦ s/x_i`. The expanded product is too large to rewrite
/// as a single polynomial; see [`super::satake_product_test`].
pub fn pairwise_distinct_factors() -> [Poly; 3] {
    let alphabet = VarAlphabet::canonical();
    let roots = |p: &str| {
        [format!("x1{p}"), format!("x2{p}"), format!("s{p}/x1{p}"), format!("s{p}/x2{p}")].map(|t| canonical(&t))
    };
    let (y, y2) = (roots(""), roots("'"));
    let disc = |r: &[Poly; 4]| {
        let mut out = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                let d = &r[i] - &r[j];
                out.push(&d * &d);
            }
        }
        product(&alphabet, out)
    };
    let cross = product(&alphabet, y.iter().flat_map(|a| y2.iter().map(move |b| a - b)));
    [disc(&y), disc(&y2), cross]
}
