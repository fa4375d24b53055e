use virasoro::whittaker::{Parallelism, WhittakerEngine};

#[test]
fn timing_k12() {
    let start = std::time::Instant::now();
    let mut eng = WhittakerEngine::new(Parallelism::default());
    eng.descendant(12).unwrap();
    println!("k=12 done in {:?}", start.elapsed());
    let mut eng2 = WhittakerEngine::new(Parallelism::Sequential);
    let s2 = std::time::Instant::now();
    eng2.descendant(12).unwrap();
    println!("k=12 sequential in {:?}", s2.elapsed());
}
