//! Acceptance suite. Runs without the libtest harness so that each criterion
//! prints a single PASS/FAIL line; exits nonzero if any criterion fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use domino_core::cycles::{all_cycles, mmt, move_through, Cycle, CycleKind};
use domino_core::equivalence::{verify_theorem, witness_chain, Partition, VerifyOptions};
use domino_core::insertion::{rs, rs_bitableau, TableauPair};
use domino_core::model::{enumerate_group, group_order, unrank};
use domino_core::structure::{
    cycle_structure_set, forest, gamma, insertion_tree_numbering, noncore_poset, LabeledTree, Tiling,
};
use domino_core::tableau::{standard_tableaux, to_bitableau};
use domino_core::{Domino, DominoTableau, Shape, SignedPermutation, Square};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sq(r: i32, c: i32) -> Square {
    Square::new(r, c)
}

fn tab(text: &str) -> DominoTableau {
    DominoTableau::parse(text).expect("fixture parses")
}

const CYCLE_EXAMPLE: &str = "\
 0  0  1  1  2  2  3  3
 0  6  6  7  7  8  8
 4  9 11 11 12 12
 4  9 15 16 18 18
 5 10 15 16
 5 10 17
13 14 17
13 14
";

fn golden_cycles() -> Outcome {
    let t = tab(CYCLE_EXAMPLE);
    let open: Vec<Cycle> =
        all_cycles(&t).into_iter().filter(|c| c.kind.is_noncore_open()).map(|c| c.cycle).collect();
    let want = vec![Cycle::from_labels([9, 10, 11, 12, 14]), Cycle::from_labels([17]), Cycle::from_labels([18])];
    ensure!(open == want, "non-core open cycles {open:?}");
    let poset = noncore_poset(&t);
    let max: Vec<&Cycle> = poset.maximal().into_iter().map(|i| &poset.cycles[i].cycle).collect();
    ensure!(max == vec![&want[0]], "maximal cycles {max:?}");
    let f = forest(&t).map_err(|e| e.to_string())?.labeled();
    let tree = LabeledTree::node(0, vec![LabeledTree::leaf(1), LabeledTree::leaf(0)]);
    ensure!(f == vec![tree], "forest {f:?}");
    Ok(())
}

fn golden_numbering() -> Outcome {
    let tiling = Tiling {
        rank: 2,
        dominos: vec![
            Domino::horizontal(sq(1, 3)),
            Domino::vertical(sq(1, 5)),
            Domino::horizontal(sq(2, 2)),
            Domino::vertical(sq(2, 4)),
            Domino::horizontal(sq(3, 1)),
            Domino::vertical(sq(3, 3)),
            Domino::horizontal(sq(4, 1)),
        ],
        links: BTreeMap::new(),
    };
    let got = insertion_tree_numbering(&tiling).map_err(|e| e.to_string())?;
    let want = tab("0 0 1 1 7\n0 2 2 6 7\n3 3 5 6\n4 4 5\n");
    ensure!(got == want, "numbering\n{got}");
    Ok(())
}

fn golden_chain() -> Outcome {
    let start = tab("0 1 1 2 2\n3 3 4 4\n5 5 6 6\n7 8 8\n7\n");
    let middle = tab("0 1 1 2 2\n3 3 4 4\n5 5 6 6\n7 8\n7 8\n");
    let end = tab("0 1 1 2 2\n3 3 4 4\n5 6 6\n5 8\n7 8\n7\n");
    let s1 = tab("0 1 1 2 2\n3 4 5 6\n3 4 5 6\n7 8 8\n7\n");
    let s1_next = tab("0 1 1 2 2\n3 4 5 5\n3 4 8 8\n6 7\n6 7\n");
    let s2 = tab("0 1 1 2 2\n3 4 5 6\n3 4 5 6\n7 8\n7 8\n");
    let merged1 = tab("0 0 1 1 2 2\n0 3 3 4 4\n5 6 6\n5 8 8\n7\n7\n");
    let merged2 = tab("0 0 1 1 2 2\n0 3 3 4 4\n5 6 6\n5 8\n7 8\n7\n");
    let chain = witness_chain(&start, &end).map_err(|e| e.to_string())?;
    ensure!(chain.tableaux == vec![start.clone(), middle.clone(), end.clone()], "chain tableaux differ");
    ensure!(chain.steps.len() == 2, "expected two steps");
    ensure!(chain.steps[0].left == s1, "first witness\n{}", chain.steps[0].left);
    ensure!(chain.steps[0].left_next == s1_next, "first partner\n{}", chain.steps[0].left_next);
    ensure!(chain.steps[1].left == s2, "second witness\n{}", chain.steps[1].left);
    ensure!(chain.steps[1].left_next == end, "second partner\n{}", chain.steps[1].left_next);
    let m = |s: &DominoTableau, t: &DominoTableau| -> Result<DominoTableau, String> {
        let p = TableauPair::new(s.clone(), t.clone()).map_err(|e| e.to_string())?;
        Ok(mmt(&p).map_err(|e| e.to_string())?.right)
    };
    ensure!(m(&s1, &start)? == merged1 && m(&s1_next, &middle)? == merged1, "first merged tableau");
    ensure!(m(&s2, &middle)? == merged2 && m(&end, &end)? == merged2, "second merged tableau");
    Ok(())
}

fn bijectivity() -> Outcome {
    for n in 1..=4 {
        for r in 0..=3 {
            let image: BTreeSet<TableauPair> = enumerate_group(n).par_bridge().map(|w| rs(&w, r)).collect();
            ensure!(image.len() == group_order(n), "rs not injective for n={n} r={r}");
            let mut by_shape: BTreeMap<Shape, usize> = BTreeMap::new();
            let all = standard_tableaux(r, n);
            for t in &all {
                *by_shape.entry(t.shape()).or_default() += 1;
            }
            let total: usize = by_shape.values().map(|c| c * c).sum();
            ensure!(total == group_order(n), "sum of squares {total} for n={n} r={r}");
            let set: BTreeSet<&DominoTableau> = all.iter().collect();
            for p in &image {
                ensure!(p.left.same_shape(&p.right), "pair shapes differ");
                ensure!(set.contains(&p.left) && set.contains(&p.right), "image leaves SDT");
            }
        }
    }
    Ok(())
}

fn inverse_symmetry() -> Outcome {
    (0..=3).into_par_iter().try_for_each(|r| {
        for w in enumerate_group(4) {
            ensure!(rs(&w.invert(), r) == rs(&w, r).swap(), "symmetry fails for {w} rank {r}");
        }
        Ok(())
    })
}

fn rank_compatibility() -> Outcome {
    let elems: Vec<SignedPermutation> = enumerate_group(4).collect();
    elems.par_iter().try_for_each(|w| {
        for r in 0..=2 {
            let got = mmt(&rs(w, r)).map_err(|e| format!("{w} rank {r}: {e}"))?;
            ensure!(got == rs(w, r + 1), "mmt differs for {w} rank {r}");
        }
        Ok(())
    })
}

fn canonical(p: &Partition) -> BTreeSet<Vec<SignedPermutation>> {
    p.iter().cloned().collect()
}

fn theorem() -> Outcome {
    let mut cases: Vec<(usize, usize)> = (2..=4).flat_map(|n| (0..=3).map(move |r| (n, r))).collect();
    cases.extend([(5, 0), (5, 1)]);
    for (n, r) in cases {
        let rep = verify_theorem(n, r, VerifyOptions::default()).map_err(|e| e.to_string())?;
        ensure!(rep.equal, "partitions differ for n={n} r={r}");
    }
    Ok(())
}

fn sample(count: usize, seed: u64) -> Vec<DominoTableau> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let w = unrank(5, rng.gen_range(0..group_order(5)));
            rs(&w, i % 3).right
        })
        .collect()
}

fn hook_shaped(t: &DominoTableau, c: &Cycle) -> bool {
    let squares: Vec<Square> = c.labels().iter().flat_map(|l| t.dominos()[l].squares()).collect();
    let rows: BTreeSet<i32> = squares.iter().map(|s| s.row).collect();
    let cols: BTreeSet<i32> = squares.iter().map(|s| s.col).collect();
    rows.iter().any(|&r| cols.iter().any(|&c| squares.iter().all(|s| s.row == r || s.col == c)))
}

fn gamma_postconditions() -> Outcome {
    sample(1000, 7).par_iter().try_for_each(|t| {
        let cs = cycle_structure_set(t);
        let g = gamma(&t.shape(), t.rank(), &cs).map_err(|e| format!("{e}\n{t}"))?;
        ensure!(g.to_raw().validate().is_valid() && g.is_standard(), "invalid output\n{g}");
        ensure!(g.same_shape(t), "shape changed\n{g}");
        ensure!(cycle_structure_set(&g) == cs, "cs differs\n{g}");
        for c in all_cycles(&g).iter().filter(|c| c.kind.is_open()) {
            ensure!(hook_shaped(&g, &c.cycle), "cycle {} not hook shaped\n{g}", c.cycle);
        }
        Ok(())
    })
}

fn moving_algebra() -> Outcome {
    let tableaux = sample(1000, 7);
    tableaux.par_iter().enumerate().try_for_each(|(i, t)| {
        let mut rng = StdRng::seed_from_u64(i as u64);
        let movable: Vec<Cycle> =
            all_cycles(t).into_iter().filter(|c| c.kind != CycleKind::Core).map(|c| c.cycle).collect();
        let (x, y): (Vec<Cycle>, Vec<Cycle>) = movable.iter().cloned().partition(|_| rng.gen_bool(0.5));
        let mv = |t: &DominoTableau, u: &[Cycle]| move_through(t, u).map_err(|e| format!("{e}\n{t}"));
        let joint = mv(t, &[x.clone(), y.clone()].concat())?;
        ensure!(mv(&mv(t, &x)?, &y)? == joint, "x then y differs\n{t}");
        ensure!(mv(&mv(t, &y)?, &x)? == joint, "y then x differs\n{t}");
        for c in &movable {
            let once = mv(t, std::slice::from_ref(c))?;
            ensure!(mv(&once, std::slice::from_ref(c))? == *t, "round trip through {c} fails\n{t}");
        }
        Ok(())
    })
}

fn large_rank() -> Outcome {
    for n in 2..=3 {
        let mut partitions = Vec::new();
        for r in n - 1..=n + 1 {
            let rep = verify_theorem(n, r, VerifyOptions::default()).map_err(|e| e.to_string())?;
            ensure!(rep.equal, "partitions differ n={n} r={r}");
            ensure!(rep.stats.iter().all(|s| s.right_tableaux == 1), "class with several tableaux n={n} r={r}");
            partitions.push(canonical(&rep.classes_sim));
            for w in enumerate_group(n) {
                let p = rs(&w, r);
                let (bp, bq) = rs_bitableau(&w);
                let got = (to_bitableau(&p.left).map_err(|e| e.to_string())?, to_bitableau(&p.right).map_err(|e| e.to_string())?);
                ensure!(got == (bp, bq), "bitableau mismatch for {w} rank {r}");
            }
        }
        ensure!(partitions.windows(2).all(|w| w[0] == w[1]), "partitions vary with rank for n={n}");
    }
    Ok(())
}

fn class_sizes() -> Outcome {
    for n in 1..=4 {
        for r in 0..=3 {
            let rep = verify_theorem(n, r, VerifyOptions::default()).map_err(|e| e.to_string())?;
            for s in &rep.stats {
                let expect = 1usize << s.noncore_open_cycles;
                ensure!(s.involutions == expect, "n={n} r={r}: {} involutions, c={}", s.involutions, s.noncore_open_cycles);
                ensure!(s.right_tableaux == expect, "n={n} r={r}: {} tableaux", s.right_tableaux);
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("golden cycles and forest", golden_cycles),
        ("golden tree numbering", golden_numbering),
        ("golden witness chain", golden_chain),
        ("bijectivity n<=4 r<=3", bijectivity),
        ("inverse symmetry H_4 r<=3", inverse_symmetry),
        ("rank compatibility H_4 r<=2", rank_compatibility),
        ("partitions coincide n<=4 r<=3 and n=5 r<=1", theorem),
        ("gamma postconditions on 1000 samples", gamma_postconditions),
        ("moving-through algebra on 1000 samples", moving_algebra),
        ("large-rank collapse n<=3", large_rank),
        ("involution class sizes n<=4", class_sizes),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS  criterion {:>2}: {name} ({secs:.2}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {:>2}: {name} ({secs:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
