use cutideal::*;
use std::time::Instant;

fn main() {
    let t0 = Instant::now();
    let c5 = cut_ideal(&Graph::cycle(5).unwrap());
    let tab = betti(&c5, 32003).unwrap();
    println!("C5 oracle: {:?} totals {:?}", t0.elapsed(), tab.totals());

    let t0 = Instant::now();
    let l5 = l_ideal(5).unwrap();
    let tab = betti(&l5, 32003).unwrap();
    println!("L(C5) oracle: {:?} totals {:?}", t0.elapsed(), tab.totals());

    let t0 = Instant::now();
    let k3 = Graph::complete(3).unwrap();
    let g = k3.clique_sum(&k3, &VertexPairing::shared(1, 1)).unwrap();
    let tab = betti(&cut_ideal(&g), 32003).unwrap();
    println!("double triangle: {:?} poly {}", t0.elapsed(), tab.poincare());

    let t0 = Instant::now();
    let c4 = Graph::cycle(4).unwrap();
    let g = c4.clique_sum(&c4, &VertexPairing::disjoint()).unwrap();
    let tab = betti(&cut_ideal(&g), 32003).unwrap();
    println!("C4|C4: {:?} pd {}", t0.elapsed(), tab.pd().unwrap());
}
