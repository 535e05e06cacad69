//! Family grids audited independently of the exhaustive sweep.

use serde::Serialize;

use super::readings::{
    cycle_at_floor, cycle_star_plus_one, theta_plus_one, unicyclic_pairing,
    unicyclic_plus_one, Reading,
};
use super::{bound_floor, Status};
use crate::families::{
    make_cycle, make_cycle_with_pendant_star, make_signed_canonical_unicyclic, make_theta,
    parity_condition, star_decomposition, ParityKind, ThetaSigns,
};
use crate::graph::Sign;
use crate::inertia::{cycle_inertia, exact_inertia, float_spectrum, FloatError, InertiaTriple};
use crate::sgf::write_sgf_inline;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleClassRow {
    pub n: usize,
    pub balanced: bool,
    pub p_plus: usize,
    pub bound_floor: usize,
    pub status: Status,
    pub closed_form_agrees: bool,
    pub stated: Status,
}

/// Observed and stated status of one (sign, n mod 4) class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleClass {
    pub balanced: bool,
    pub n_mod_4: usize,
    pub observed: Vec<Status>,
    pub stated: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleClassMismatch {
    pub balanced: bool,
    pub n_mod_4: usize,
    pub stated: Status,
    pub observed: Status,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleClassTable {
    pub max_n: usize,
    pub rows: Vec<CycleClassRow>,
    pub classes: Vec<CycleClass>,
    pub mismatches: Vec<CycleClassMismatch>,
    pub closed_form_disagreements: usize,
}

fn cycle_status(at_floor: bool) -> Status {
    if at_floor {
        Status::Equality
    } else {
        Status::PlusOne
    }
}

/// Cycles of order `3..=max_n`, both signs: symbolic against exact inertia,
/// and the observed class map against the stated one.
pub fn cycle_class_table(max_n: usize) -> CycleClassTable {
    let mut rows = Vec::new();
    for n in 3..=max_n {
        for balanced in [true, false] {
            let exact = exact_inertia(&make_cycle(n, balanced).expect("n >= 3"));
            let symbolic = cycle_inertia(n, balanced).expect("n >= 3");
            let floor = bound_floor(n);
            rows.push(CycleClassRow {
                n,
                balanced,
                p_plus: exact.p_plus,
                bound_floor: floor,
                status: Status::from_counts(exact.p_plus, floor),
                closed_form_agrees: exact == symbolic,
                stated: cycle_status(cycle_at_floor(n, balanced, Reading::Stated)),
            });
        }
    }
    let mut classes = Vec::new();
    let mut mismatches = Vec::new();
    for balanced in [true, false] {
        for r in 0..4 {
            let members: Vec<&CycleClassRow> =
                rows.iter().filter(|row| row.balanced == balanced && row.n % 4 == r).collect();
            let mut observed: Vec<Status> = members.iter().map(|row| row.status).collect();
            observed.sort();
            observed.dedup();
            let stated = cycle_status(cycle_at_floor(r + 4, balanced, Reading::Stated));
            if let Some(w) = members.iter().find(|row| row.status != stated) {
                mismatches.push(CycleClassMismatch {
                    balanced,
                    n_mod_4: r,
                    stated,
                    observed: w.status,
                    witness: write_sgf_inline(&make_cycle(w.n, balanced).expect("n >= 3")),
                });
            }
            classes.push(CycleClass { balanced, n_mod_4: r, observed, stated });
        }
    }
    let closed_form_disagreements = rows.iter().filter(|r| !r.closed_form_agrees).count();
    CycleClassTable { max_n, rows, classes, mismatches, closed_form_disagreements }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStarRow {
    pub girth: usize,
    pub balanced: bool,
    pub t: usize,
    pub p_plus: usize,
    pub status: Status,
    pub stated_plus_one: bool,
    pub corrected_plus_one: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleStarTable {
    pub rows: Vec<CycleStarRow>,
    /// `(balanced, girth mod 4)` pairs observed at `⌈g/2⌉`.
    pub plus_one_classes: Vec<(bool, usize)>,
    pub stated_mismatches: usize,
    pub corrected_mismatches: usize,
}

/// A cycle with one pendant star, girth `3..=max_girth`, `t` in `1..=max_t`.
pub fn cycle_star_table(max_girth: usize, max_t: usize) -> CycleStarTable {
    let mut rows = Vec::new();
    for girth in 3..=max_girth {
        for balanced in [true, false] {
            for t in 1..=max_t {
                let g = make_cycle_with_pendant_star(girth, balanced, t).expect("valid parameters");
                let p_plus = exact_inertia(&g).p_plus;
                rows.push(CycleStarRow {
                    girth,
                    balanced,
                    t,
                    p_plus,
                    status: Status::from_counts(p_plus, bound_floor(girth)),
                    stated_plus_one: cycle_star_plus_one(girth, balanced, Reading::Stated),
                    corrected_plus_one: cycle_star_plus_one(girth, balanced, Reading::Corrected),
                });
            }
        }
    }
    let mut plus_one_classes: Vec<(bool, usize)> = rows
        .iter()
        .filter(|r| r.status == Status::PlusOne)
        .map(|r| (r.balanced, r.girth % 4))
        .collect();
    plus_one_classes.sort();
    plus_one_classes.dedup();
    let observed = |r: &CycleStarRow| r.status == Status::PlusOne;
    let stated_mismatches = rows.iter().filter(|r| r.stated_plus_one != observed(r)).count();
    let corrected_mismatches = rows.iter().filter(|r| r.corrected_plus_one != observed(r)).count();
    CycleStarTable { rows, plus_one_classes, stated_mismatches, corrected_mismatches }
}

/// Which parity pattern coincides with plus-one at a given girth parity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityPairing {
    pub girth_parity: &'static str,
    pub observed: Vec<ParityKind>,
    pub stated: ParityKind,
    pub proof: ParityKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicAudit {
    pub max_girth: usize,
    pub max_stars: usize,
    pub max_leaves: usize,
    pub cases: usize,
    /// Cases where `t + Σ⌊n_i/2⌋` differs from the exact `p+`.
    pub law_failures: usize,
    pub first_law_failure: Option<String>,
    pub recognition_failures: usize,
    pub pairings: Vec<ParityPairing>,
    pub stated_mismatches: usize,
    pub corrected_mismatches: usize,
    /// Set when the stated pairing is the proof's pairing with the girth
    /// classes swapped.
    pub interchanged: bool,
}

fn parity_name(odd: bool) -> &'static str {
    if odd {
        "odd"
    } else {
        "even"
    }
}

fn star_layouts(girth: usize, max_stars: usize, max_leaves: usize) -> Vec<Vec<(usize, usize)>> {
    let mut layouts = Vec::new();
    for mask in 1u32..(1 << girth) {
        let positions: Vec<usize> = (0..girth).filter(|&i| mask >> i & 1 == 1).collect();
        if positions.len() > max_stars {
            continue;
        }
        let k = positions.len();
        let combos = max_leaves.pow(k as u32);
        for mut c in 0..combos {
            let mut stars = Vec::with_capacity(k);
            for &p in &positions {
                stars.push((p, c % max_leaves + 1));
                c /= max_leaves;
            }
            layouts.push(stars);
        }
    }
    layouts
}

/// Canonical unicyclic graphs on cycles `3..=max_girth` with up to
/// `max_stars` starred vertices carrying `1..=max_leaves` leaves each, both
/// cycle signs.
pub fn unicyclic_audit(max_girth: usize, max_stars: usize, max_leaves: usize) -> UnicyclicAudit {
    let mut cases = 0;
    let mut law_failures = 0;
    let mut first_law_failure = None;
    let mut recognition_failures = 0;
    let mut stated_mismatches = 0;
    let mut corrected_mismatches = 0;
    // observed parity kinds at plus-one, indexed by girth parity
    let mut observed: [Vec<ParityKind>; 2] = [Vec::new(), Vec::new()];
    for girth in 3..=max_girth {
        for stars in star_layouts(girth, max_stars, max_leaves) {
            for balanced in [true, false] {
                cases += 1;
                let g = make_signed_canonical_unicyclic(girth, balanced, &stars).expect("valid layout");
                let Some(sd) = star_decomposition(&g) else {
                    recognition_failures += 1;
                    continue;
                };
                let p_plus = exact_inertia(&g).p_plus;
                if sd.predicted_positive_inertia() != p_plus {
                    law_failures += 1;
                    first_law_failure.get_or_insert_with(|| write_sgf_inline(&g));
                }
                let plus_one = Status::from_counts(p_plus, bound_floor(girth)) == Status::PlusOne;
                if plus_one != unicyclic_plus_one(&sd, girth, Reading::Stated) {
                    stated_mismatches += 1;
                }
                if plus_one != unicyclic_plus_one(&sd, girth, Reading::Corrected) {
                    corrected_mismatches += 1;
                }
                let kind = parity_condition(&sd, girth).expect("consistent").kind;
                if plus_one && kind != ParityKind::SingleStar {
                    observed[girth % 2].push(kind);
                }
            }
        }
    }
    let pairings: Vec<ParityPairing> = [true, false]
        .into_iter()
        .map(|odd| {
            let mut kinds = observed[usize::from(odd)].clone();
            kinds.sort();
            kinds.dedup();
            let representative = if odd { 3 } else { 4 };
            ParityPairing {
                girth_parity: parity_name(odd),
                observed: kinds,
                stated: unicyclic_pairing(representative, Reading::Stated),
                proof: unicyclic_pairing(representative, Reading::Corrected),
            }
        })
        .collect();
    let interchanged = pairings[0].stated == pairings[1].proof && pairings[1].stated == pairings[0].proof;
    UnicyclicAudit {
        max_girth,
        max_stars,
        max_leaves,
        cases,
        law_failures,
        first_law_failure,
        recognition_failures,
        pairings,
        stated_mismatches,
        corrected_mismatches,
        interchanged,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ThetaFixture {
    pub label: String,
    pub girth: usize,
    pub exact: InertiaTriple,
    pub float: InertiaTriple,
    pub expected_p_plus: usize,
    pub status: Status,
    pub stated_plus_one: bool,
}

/// The three bicyclic graphs named in the plus-one list.
pub fn theta_fixtures() -> Result<Vec<ThetaFixture>, FloatError> {
    let neg = ThetaSigns::new(Sign::Minus, Sign::Minus);
    let cases = [
        (5, 5, 5, ThetaSigns::BALANCED, 4),
        (5, 4, 5, ThetaSigns::BALANCED, 4),
        (5, 3, 5, neg, 3),
    ];
    cases
        .into_iter()
        .map(|(k, l, m, signs, expected)| {
            let g = make_theta(k, l, m, signs).expect("valid theta");
            let girth = (k + l).min(k + m).min(l + m) - 2;
            let exact = exact_inertia(&g);
            let float = float_spectrum(&g)?.inertia();
            let label = crate::families::FamilyLabel::theta_from_params(k, l, m, signs);
            Ok(ThetaFixture {
                label: label.to_string(),
                girth,
                exact,
                float,
                expected_p_plus: expected,
                status: Status::from_counts(exact.p_plus, bound_floor(girth)),
                stated_plus_one: theta_plus_one(k, l, m, signs.kl, signs.lm),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_table_flags_balanced_five() {
        let t = cycle_class_table(12);
        assert_eq!(t.closed_form_disagreements, 0);
        let five = t.rows.iter().find(|r| r.n == 5 && r.balanced).unwrap();
        assert_eq!((five.p_plus, five.status), (3, Status::PlusOne));
        assert!(t.mismatches.iter().any(|m| m.balanced && m.n_mod_4 == 1));
        // four of the eight classes are misplaced
        assert_eq!(t.mismatches.len(), 4);
        assert!(t.classes.iter().all(|c| c.observed.len() == 1));
    }

    #[test]
    fn cycle_star_classes_follow_corrected_cycles() {
        let t = cycle_star_table(12, 3);
        assert_eq!(t.corrected_mismatches, 0);
        assert!(t.stated_mismatches > 0);
        assert_eq!(t.plus_one_classes, vec![(false, 1), (false, 2), (true, 0), (true, 3)]);
    }

    #[test]
    fn small_unicyclic_grid() {
        let a = unicyclic_audit(6, 2, 2);
        assert_eq!(a.law_failures, 0);
        assert_eq!(a.recognition_failures, 0);
        assert_eq!(a.corrected_mismatches, 0);
        assert!(a.interchanged);
    }

    #[test]
    fn layouts_count() {
        // 4 positions, one or two stars, leaves 1..=2
        assert_eq!(star_layouts(4, 2, 2).len(), 4 * 2 + 6 * 4);
    }
}
