use lsft::disks::{sweep_disks, SweepConfig, SweepMode};

fn main() {
    let cfg = SweepConfig::default();
    for seed in [23u64] {
        let d = lsft::corpus::random_front(seed, &lsft::corpus::CorpusOptions::default());
        for e in &d.piece.events { println!("event {:?}", e.kind); }
        let (left, mid, right) = d.split().unwrap();
        println!("mid: n={} bl={:?} br={:?} mu={:?}", mid.n, mid.beta_left.pairs, mid.beta_right.pairs, mid.mu);
        println!("-- right piece disks:");
        for disk in sweep_disks(&right.piece, SweepMode::All, &cfg).unwrap() {
            println!("  {}  t={} corners={:?}", lsft::disks::word_text(&disk.word), disk.t_exp, disk.corners);
        }
        println!("-- left piece disks:");
        for disk in sweep_disks(&left.piece, SweepMode::All, &cfg).unwrap() {
            println!("  {}  t={}", lsft::disks::word_text(&disk.word), disk.t_exp);
        }
        println!("-- full disks:");
        for disk in sweep_disks(&d.piece, SweepMode::All, &cfg).unwrap() {
            println!("  {}  t={}", lsft::disks::word_text(&disk.word), disk.t_exp);
        }
    }
}
