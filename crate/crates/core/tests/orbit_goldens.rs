use exceptional::field::PrimeField;
use exceptional::fts::{omega_bfs, qd_orbit_partition, Fts};
use exceptional::orbit::{omega_size_dim1, omega_size_dim2, BfsOptions, GeneratorSet, OrbitSet};
use exceptional::par::Workers;

#[test]
fn dim1_omega_matches_lagrangian_count() {
    let opts = BfsOptions::default();
    for q in [5u64, 7] {
        let omega = omega_bfs(1, q, &opts).unwrap();
        assert_eq!(omega.len() as u64, omega_size_dim1(q));
        let classes = qd_orbit_partition(&omega, 1, q, &opts).unwrap();
        assert_eq!(classes.len(), 4);
    }
}

#[test]
fn full_root_subgroups_and_shuffled_order_give_the_same_orbit() {
    let fts = Fts::new(PrimeField::new(5).unwrap(), 1).unwrap();
    let opts = BfsOptions::default();
    let mut v1 = vec![0u32; fts.width()];
    v1[0] = 1;
    let base = omega_bfs(1, 5, &opts).unwrap();
    let full = GeneratorSet::unipotent(&fts, true).unwrap();
    assert_eq!(
        OrbitSet::generate(&full, &[v1.clone()], &opts).unwrap(),
        base
    );
    let shuffled = GeneratorSet::unipotent(&fts, false).unwrap().shuffled(7);
    assert_eq!(
        OrbitSet::generate(&shuffled, &[v1.clone()], &opts).unwrap(),
        base
    );
    let par = BfsOptions {
        workers: Workers::new(3).unwrap(),
        chunk: 1000,
        ..BfsOptions::default()
    };
    assert_eq!(OrbitSet::generate(&shuffled, &[v1], &par).unwrap(), base);
}

#[test]
fn dim2_omega_matches_trivector_count() {
    let opts = BfsOptions::default();
    let t = std::time::Instant::now();
    let omega = omega_bfs(2, 5, &opts).unwrap();
    eprintln!("omega dim2 q5: {} in {:?}", omega.len(), t.elapsed());
    assert_eq!(omega.len() as u64, omega_size_dim2(5));
    let t = std::time::Instant::now();
    let classes = qd_orbit_partition(&omega, 2, 5, &opts).unwrap();
    eprintln!(
        "partition: {:?} in {:?}",
        classes.iter().map(|c| c.len()).collect::<Vec<_>>(),
        t.elapsed()
    );
}
