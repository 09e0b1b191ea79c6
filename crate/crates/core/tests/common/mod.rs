#![allow(dead_code)]

use lieorb::liealg::LieAlgebra;
use lieorb::orbits::{complete_triple, find_representative, Characteristic, NilpotentOrbit, WeightedDynkinDiagram};
use lieorb::refdata::RefData;

pub fn alg(t: &str) -> LieAlgebra {
    LieAlgebra::new(t.parse().unwrap())
}

pub fn orbit_by_diagram(l: &LieAlgebra, labels: &[i64]) -> NilpotentOrbit {
    let d = WeightedDynkinDiagram::new(l.rank(), labels).unwrap();
    let e = find_representative(l, &d, 1).unwrap();
    let h = Characteristic::new(l, &d).unwrap().h;
    let triple = complete_triple(l, &h, &e).unwrap();
    NilpotentOrbit { diagram: d, triple, label: None }
}

pub fn orbit_by_label(l: &LieAlgebra, label: &str) -> NilpotentOrbit {
    let r = RefData::embedded().unwrap();
    let rec = r.lookup_label(l.type_rank(), label).unwrap();
    let labels: Vec<i64> = rec.diagram.iter().map(|&v| v as i64).collect();
    let mut o = orbit_by_diagram(l, &labels);
    o.label = Some(rec.label.clone());
    o
}
