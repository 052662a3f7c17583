//! Runs every acceptance criterion and prints one line per criterion.

use skein::verify::{criteria, Options};

#[test]
fn acceptance() {
    let opts = Options { deep: std::env::var_os("SKEIN_DEEP").is_some(), ..Options::default() };
    let mut failed = Vec::new();
    for c in criteria() {
        let checks = c.run(&opts);
        let bad: Vec<_> = checks.iter().filter(|r| !r.pass).collect();
        let ms: u64 = checks.iter().map(|r| r.ms).sum();
        let tag = if bad.is_empty() { "PASS" } else { "FAIL" };
        println!("{tag} criterion {:>2}: {} ({}/{} checks, {ms} ms)", c.id, c.title, checks.len() - bad.len(), checks.len());
        for r in &bad {
            println!("       {}: expected {}, got {}", r.name, r.expected, r.actual);
        }
        if !bad.is_empty() {
            failed.push(c.id);
        }
    }
    assert!(failed.is_empty(), "criteria failed: {failed:?}");
}
