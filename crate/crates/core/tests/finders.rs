use rgirth::bounds::feasible_params;
use rgirth::finders::{
    find_matching_edge_sampled, find_mixed, find_simplified, find_triangle_edge, FinderRun, TrialCondition,
};
use rgirth::generators::{gen_random_mixed, InstanceSpec};
use rgirth::graph::is_rainbow_cycle;
use rgirth::oracle::rainbow_girth_exact;
use rgirth::{ColoredGraph, Error};

fn inst(n: usize, matchings: usize, triangles: usize, singles: usize, seed: u64) -> Option<ColoredGraph> {
    gen_random_mixed(&InstanceSpec { n, matchings, triangles, singles, seed }).ok()
}

fn assert_sound(g: &ColoredGraph, run: &FinderRun) {
    let c = is_rainbow_cycle(g, &run.cycle.vertices).unwrap();
    assert!(c.rainbow);
    assert_eq!(c.length, run.cycle.length);
    assert_eq!(run.within_bound(), Some(true));
    let exact = rainbow_girth_exact(g, None).expect("finder found a rainbow cycle");
    assert!(run.cycle.length >= exact.length, "{} < {}", run.cycle.length, exact.length);
}

#[test]
fn triangle_finder_never_beats_exact() {
    let mut runs = 0;
    for seed in 0..60 {
        let n = 8 + (seed as usize % 17);
        let triangles = 2 + seed as usize % (n / 2);
        let Some(g) = inst(n, 0, triangles, n - triangles, seed) else { continue };
        assert_sound(&g, &find_triangle_edge(&g, seed).unwrap());
        runs += 1;
    }
    assert!(runs >= 40, "{runs}");
}

#[test]
fn simplified_finder_never_beats_exact() {
    let ps = feasible_params(0.6, None).unwrap().unwrap();
    let mut found = 0;
    for seed in 0..40 {
        let Some(g) = inst(20, 12, 0, 8, seed) else { continue };
        match find_simplified(&g, &ps, seed, 64) {
            Ok(run) => {
                assert_sound(&g, &run);
                found += 1;
            }
            Err(Error::RetriesExhausted { trials }) => assert_eq!(trials.len(), 64),
            Err(e) => panic!("{e}"),
        }
    }
    assert!(found > 0);
}

#[test]
fn mixed_triangle_route_never_beats_exact() {
    for seed in 0..30 {
        let Some(g) = inst(16, 8, 8, 0, seed) else { continue };
        assert_sound(&g, &find_mixed(&g, seed).unwrap());
    }
}

#[test]
fn sampled_trials_record_their_conditions() {
    let ps = feasible_params(0.6, None).unwrap().unwrap();
    let g = inst(2000, 1200, 0, 800, 9).unwrap();
    let run = find_matching_edge_sampled(&g, &ps, 9, 64).unwrap();
    let (last, earlier) = run.trials.split_last().unwrap();
    assert!(last.accepted && last.reasons.is_empty());
    assert!(earlier.iter().all(|t| !t.accepted && !t.reasons.is_empty()));
    let (s, x, y) = (last.size_s.unwrap(), last.x.unwrap(), last.y.unwrap());
    assert_eq!(last.r_s, Some(x + y));
    assert!(last.heavy_count.unwrap() <= s);
    assert_eq!(run.certificate.span, s);
    assert_eq!(run.certificate.selected_edges, x + y);
    assert!(is_rainbow_cycle(&g, &run.cycle.vertices).unwrap().rainbow);
}

#[test]
fn exhausted_retries_return_every_trial() {
    // threshold 0 keeps every vertex, so X + Y <= m = |S| < |S| + 2
    let mut ps = feasible_params(0.6, None).unwrap().unwrap();
    ps.heavy_threshold = Some(0);
    let g = inst(200, 120, 0, 80, 1).unwrap();
    let trials = match find_matching_edge_sampled(&g, &ps, 1, 5) {
        Err(Error::RetriesExhausted { trials }) => trials,
        other => panic!("expected exhaustion, got {other:?}"),
    };
    assert_eq!(trials.len(), 5);
    assert!(trials.iter().all(|t| !t.accepted && t.failed(TrialCondition::Excess)));
    assert_ne!(trials[0].seed, trials[1].seed);
}

#[test]
fn seeds_reproduce_runs() {
    let ps = feasible_params(0.6, None).unwrap().unwrap();
    let g = inst(1000, 600, 0, 400, 4).unwrap();
    let a = find_simplified(&g, &ps, 11, 64).unwrap();
    let b = find_simplified(&g, &ps, 11, 64).unwrap();
    assert_eq!(a.cycle, b.cycle);
    assert_eq!(a.trials, b.trials);
}
