//! Projections and open sample sizes of the running example.

use std::time::Instant;

use hpcad::corpus::ex1;
use hpcad::lifting::{hp_two, open_cad, reduced_sample, LiftOptions};
use hpcad::poly::UniPoly;
use hpcad::projection::{bp_chain, hp};
use hpcad::realroots::{isolate, Strategy};

fn main() {
    let t = Instant::now();
    let (f, order) = ex1();
    let names = order.names().to_vec();
    let chain = bp_chain(&f, &[2, 1]).unwrap();
    let h = hp(&f, &[2, 1]).unwrap();
    println!("chain z,y = {}", chain.display_with(&names));
    println!("hp        = {}", h.display_with(&names));
    println!(
        "real roots: chain {}, hp {}",
        isolate(&UniPoly::from_multi(&chain, 0)).unwrap().len(),
        isolate(&UniPoly::from_multi(&h, 0)).unwrap().len()
    );
    for s in [Strategy::Simplest, Strategy::Midpoint] {
        let o = LiftOptions::new(s);
        let a = open_cad(&f, &o).unwrap();
        let b = hp_two(&f, &o).unwrap();
        let c = reduced_sample(&f, 2, &o).unwrap();
        println!(
            "{s}: open cad {:?}, hp two {:?}, reduced {}",
            a.counts,
            b.counts,
            c.len()
        );
    }
    println!("{:.2?}", t.elapsed());
}
