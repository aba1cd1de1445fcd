use std::f64::consts::PI;

use super::{ConstrainedProblem, Constraint, VariableKind};
use crate::{Bounds, Scalar};

fn c<S: Scalar>(v: f64) -> S {
    S::lit(v)
}

fn bounds<S: Scalar>(lower: &[f64], upper: &[f64]) -> Bounds<S> {
    Bounds::new(
        lower.iter().map(|&v| c(v)).collect(),
        upper.iter().map(|&v| c(v)).collect(),
    )
    .expect("static engineering bounds are valid")
}

// Pressure vessel: x = (Ts, Th, R, L), inches.

fn vessel_cost<S: Scalar>(x: &[S]) -> S {
    let (ts, th, r, l) = (x[0], x[1], x[2], x[3]);
    c::<S>(0.6224) * ts * r * l
        + c::<S>(1.7781) * th * r * r
        + c::<S>(3.1661) * ts * ts * l
        + c::<S>(19.84) * ts * ts * r
}

fn vessel_shell<S: Scalar>(x: &[S]) -> S {
    -x[0] + c::<S>(0.0193) * x[2]
}

fn vessel_head<S: Scalar>(x: &[S]) -> S {
    -x[1] + c::<S>(0.00954) * x[2]
}

fn vessel_volume<S: Scalar>(x: &[S]) -> S {
    let (r, l) = (x[2], x[3]);
    -c::<S>(PI) * r * r * l - c::<S>(4.0 / 3.0 * PI) * r * r * r + c(1_296_000.0)
}

fn vessel_length<S: Scalar>(x: &[S]) -> S {
    x[3] - c(240.0)
}

/// Cylindrical pressure vessel with hemispherical heads; shell and head
/// thickness come in multiples of 1/16 inch.
pub fn pressure_vessel<S: Scalar>() -> ConstrainedProblem<S> {
    let plate = VariableKind::Lattice { step: c(0.0625) };
    ConstrainedProblem {
        name: "pressure-vessel",
        variable_names: vec!["T_s", "T_h", "R", "L"],
        bounds: bounds(&[0.0625, 0.0625, 10.0, 10.0], &[6.1875, 6.1875, 200.0, 200.0]),
        kinds: vec![plate.clone(), plate, VariableKind::Continuous, VariableKind::Continuous],
        objective: vessel_cost::<S>,
        constraints: vec![
            Constraint { name: "shell thickness", g: vessel_shell::<S> },
            Constraint { name: "head thickness", g: vessel_head::<S> },
            Constraint { name: "volume", g: vessel_volume::<S> },
            Constraint { name: "length", g: vessel_length::<S> },
        ],
    }
}

// Stepped cantilever beam: x = (b1, h1, ..., b5, h5), cm. Segment 1 sits at
// the wall, segment 5 carries the tip load.

const BEAM_LOAD: f64 = 50_000.0;
const BEAM_SEGMENT: f64 = 100.0;
const BEAM_MODULUS: f64 = 2.0e7;
const BEAM_STRESS: f64 = 14_000.0;
const BEAM_DEFLECTION: f64 = 2.7;
const BEAM_ASPECT: f64 = 20.0;

fn beam_volume<S: Scalar>(x: &[S]) -> S {
    x.chunks(2)
        .fold(S::zero(), |acc, seg| acc + seg[0] * seg[1] * c(BEAM_SEGMENT))
}

fn beam_stress<S: Scalar, const SEG: usize>(x: &[S]) -> S {
    let (b, h) = (x[2 * SEG], x[2 * SEG + 1]);
    let arm = BEAM_SEGMENT * (5 - SEG) as f64;
    c::<S>(6.0 * BEAM_LOAD * arm) / (b * h * h) - c(BEAM_STRESS)
}

fn beam_deflection<S: Scalar>(x: &[S]) -> S {
    // (3k^2 - 3k + 1) weights, k counted from the tip
    const WEIGHTS: [f64; 5] = [61.0, 37.0, 19.0, 7.0, 1.0];
    let compliance = x
        .chunks(2)
        .zip(WEIGHTS)
        .fold(S::zero(), |acc, (seg, w)| {
            let inertia = seg[0] * seg[1].powi(3) / c(12.0);
            acc + c::<S>(w) / inertia
        });
    c::<S>(BEAM_LOAD * BEAM_SEGMENT.powi(3) / (3.0 * BEAM_MODULUS)) * compliance
        - c(BEAM_DEFLECTION)
}

fn beam_aspect<S: Scalar, const SEG: usize>(x: &[S]) -> S {
    x[2 * SEG + 1] / x[2 * SEG] - c(BEAM_ASPECT)
}

/// Five-segment stepped cantilever, minimum volume.
pub fn stepped_beam<S: Scalar>() -> ConstrainedProblem<S> {
    let set = |values: &[f64]| VariableKind::Set(values.iter().map(|&v| c(v)).collect());
    let widths = set(&[2.4, 2.6, 2.8, 3.1]);
    let heights = set(&[45.0, 50.0, 55.0, 60.0]);
    let integer = VariableKind::Lattice { step: S::one() };
    ConstrainedProblem {
        name: "stepped-beam",
        variable_names: vec!["b1", "h1", "b2", "h2", "b3", "h3", "b4", "h4", "b5", "h5"],
        bounds: bounds(
            &[1.0, 30.0, 2.4, 45.0, 2.4, 45.0, 1.0, 30.0, 1.0, 30.0],
            &[5.0, 65.0, 3.1, 60.0, 3.1, 60.0, 5.0, 65.0, 5.0, 65.0],
        ),
        kinds: vec![
            integer.clone(),
            integer,
            widths.clone(),
            heights.clone(),
            widths,
            heights,
            VariableKind::Continuous,
            VariableKind::Continuous,
            VariableKind::Continuous,
            VariableKind::Continuous,
        ],
        objective: beam_volume::<S>,
        constraints: vec![
            Constraint { name: "stress 1", g: beam_stress::<S, 0> },
            Constraint { name: "stress 2", g: beam_stress::<S, 1> },
            Constraint { name: "stress 3", g: beam_stress::<S, 2> },
            Constraint { name: "stress 4", g: beam_stress::<S, 3> },
            Constraint { name: "stress 5", g: beam_stress::<S, 4> },
            Constraint { name: "tip deflection", g: beam_deflection::<S> },
            Constraint { name: "aspect 1", g: beam_aspect::<S, 0> },
            Constraint { name: "aspect 2", g: beam_aspect::<S, 1> },
            Constraint { name: "aspect 3", g: beam_aspect::<S, 2> },
            Constraint { name: "aspect 4", g: beam_aspect::<S, 3> },
            Constraint { name: "aspect 5", g: beam_aspect::<S, 4> },
        ],
    }
}

// Welded beam: x = (h, l, t, b), inches.

const WELD_LOAD: f64 = 6000.0;
const WELD_LENGTH: f64 = 14.0;
const WELD_E: f64 = 30e6;
const WELD_G: f64 = 12e6;
const WELD_TAU_MAX: f64 = 13_600.0;
const WELD_SIGMA_MAX: f64 = 30_000.0;
const WELD_DELTA_MAX: f64 = 0.25;

fn weld_cost<S: Scalar>(x: &[S]) -> S {
    let (h, l, t, b) = (x[0], x[1], x[2], x[3]);
    c::<S>(1.10471) * h * h * l + c::<S>(0.04811) * t * b * (c::<S>(14.0) + l)
}

fn weld_shear<S: Scalar>(x: &[S]) -> S {
    let (h, l, t) = (x[0], x[1], x[2]);
    let two = c::<S>(2.0);
    let sqrt2 = two.sqrt();
    let primary = c::<S>(WELD_LOAD) / (sqrt2 * h * l);
    let moment = c::<S>(WELD_LOAD) * (c::<S>(WELD_LENGTH) + l / two);
    let half_sum = (h + t) / two;
    let radius = (l * l / c(4.0) + half_sum * half_sum).sqrt();
    let polar = two * (sqrt2 * h * l * (l * l / c(12.0) + half_sum * half_sum));
    let secondary = moment * radius / polar;
    let tau = (primary * primary
        + two * primary * secondary * l / (two * radius)
        + secondary * secondary)
        .sqrt();
    tau - c(WELD_TAU_MAX)
}

fn weld_bending<S: Scalar>(x: &[S]) -> S {
    let (t, b) = (x[2], x[3]);
    c::<S>(6.0 * WELD_LOAD * WELD_LENGTH) / (b * t * t) - c(WELD_SIGMA_MAX)
}

fn weld_geometry<S: Scalar>(x: &[S]) -> S {
    x[0] - x[3]
}

fn weld_budget<S: Scalar>(x: &[S]) -> S {
    let (h, l, t, b) = (x[0], x[1], x[2], x[3]);
    c::<S>(0.10471) * h * h + c::<S>(0.04811) * t * b * (c::<S>(14.0) + l) - c(5.0)
}

fn weld_min_height<S: Scalar>(x: &[S]) -> S {
    c::<S>(0.125) - x[0]
}

fn weld_deflection<S: Scalar>(x: &[S]) -> S {
    let (t, b) = (x[2], x[3]);
    c::<S>(4.0 * WELD_LOAD * WELD_LENGTH.powi(3) / WELD_E) / (t * t * t * b) - c(WELD_DELTA_MAX)
}

fn weld_buckling<S: Scalar>(x: &[S]) -> S {
    let (t, b) = (x[2], x[3]);
    let shape = (t * t * b.powi(6) / c(36.0)).sqrt();
    let critical = c::<S>(4.013 * WELD_E / (WELD_LENGTH * WELD_LENGTH))
        * shape
        * (S::one() - t / c(2.0 * WELD_LENGTH) * c::<S>((WELD_E / (4.0 * WELD_G)).sqrt()));
    c::<S>(WELD_LOAD) - critical
}

/// Welded cantilever beam, minimum fabrication cost.
pub fn welded_beam<S: Scalar>() -> ConstrainedProblem<S> {
    ConstrainedProblem {
        name: "welded-beam",
        variable_names: vec!["h", "l", "t", "b"],
        bounds: bounds(&[0.1, 0.1, 0.1, 0.1], &[2.0, 10.0, 10.0, 2.0]),
        kinds: vec![VariableKind::Continuous; 4],
        objective: weld_cost::<S>,
        constraints: vec![
            Constraint { name: "shear stress", g: weld_shear::<S> },
            Constraint { name: "bending stress", g: weld_bending::<S> },
            Constraint { name: "weld within bar", g: weld_geometry::<S> },
            Constraint { name: "cost budget", g: weld_budget::<S> },
            Constraint { name: "minimum weld", g: weld_min_height::<S> },
            Constraint { name: "end deflection", g: weld_deflection::<S> },
            Constraint { name: "buckling load", g: weld_buckling::<S> },
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn vessel_reference_designs() {
        let p = pressure_vessel::<f64>();
        let fwsc = [0.8750, 0.4375, 44.5025, 149.0235];
        assert!(rel(p.objective_value(&fwsc), 6189.6362) < 5e-3);
        assert!(p.is_feasible(&fwsc));
        let cpso = [0.8125, 0.4375, 42.0912, 176.7465];
        assert!(rel(p.objective_value(&cpso), 6061.0777) < 5e-3);
        assert!(p.max_violation(&[0.8125, 0.4375, 0.0, 176.7465]) > 0.0);
    }

    #[test]
    fn beam_reference_volume_and_linearity() {
        let p = stepped_beam::<f64>();
        let ci_spf = [3.0, 60.0, 3.1, 55.0, 2.6, 50.0, 2.2046, 44.0915, 1.7497, 34.9951];
        assert!(rel(p.objective_value(&ci_spf), 63893.4544) < 5e-3);
        let bb_ru = [4.0, 62.0, 3.1, 60.0, 2.6, 55.0, 2.2052, 44.09, 1.751, 35.03];
        assert!(rel(p.objective_value(&bb_ru), 73555.00) < 5e-3);
        let mut doubled = ci_spf;
        for i in (0..10).step_by(2) {
            doubled[i] *= 2.0;
        }
        let v = p.objective_value(&ci_spf);
        assert!((p.objective_value(&doubled) - 2.0 * v).abs() < 1e-9 * v);
    }

    #[test]
    fn welded_reference_designs() {
        let p = welded_beam::<f64>();
        let pso = [0.2023, 3.5442, 9.0482, 0.2057];
        assert!(rel(p.objective_value(&pso), 1.7280) < 5e-3);
        assert!(p.is_feasible(&pso));
        let cbo = [0.2057, 3.4704, 9.0372, 0.2057];
        assert!(rel(p.objective_value(&cbo), 1.7246) < 5e-3);
        let mut tall = pso;
        tall[0] = 0.3;
        assert!((p.constraint_values(&tall)[2] - (0.3 - 0.2057)).abs() < 1e-12);
    }
}
