//! Acceptance criteria, one line each. Runs without the libtest harness so the
//! lines show up in plain `cargo test` output.
//!
//! Criterion 7 does not hold: the full swu sweep breaks on `χ_1(1423)`. It is
//! reported as FAIL, and the run still succeeds only if the failure is exactly
//! the known counterexample and the sound part of the sweep passes.

use std::process::ExitCode;
use std::time::Instant;

use stackwilf::perm::chi;
use stackwilf::sliding::swu_transport;
use stackwilf::stacksort::sort_once;
use stackwilf::stats::tail_length;
use stackwilf::trees::{in_order, in_order_inverse, postorder};
use stackwilf::verify::{find_claim, VerifyConfig};
use stackwilf::vhc::split_by_hook;
use stackwilf::{Hook, Permutation, ValidHookConfiguration};

type Check = Result<String, String>;

fn perm(s: &str) -> Permutation {
    s.parse().expect("literal permutation")
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn claims(ids: &[&str]) -> Check {
    let cfg = VerifyConfig::default();
    let mut parts = Vec::new();
    for id in ids {
        let claim = find_claim(id).map_err(|e| e.to_string())?;
        let r = claim.run(&cfg);
        if !r.passed() {
            return Err(format!("{id}: {}", r.witness.unwrap_or_default()));
        }
        parts.push(format!("{id} {}ms", r.elapsed_ms));
    }
    Ok(parts.join(", "))
}

fn worked_examples() -> Check {
    let run = || -> Result<(), String> {
        expect("s(43512)", sort_once(&perm("43512")), perm("34125"))?;
        let left = in_order_inverse(&perm("4276153"));
        let right = in_order_inverse(&perm("2476153"));
        expect("in-order left", in_order(&left).map_err(|e| e.to_string())?, perm("4276153"))?;
        expect("in-order right", in_order(&right).map_err(|e| e.to_string())?, perm("2476153"))?;
        expect("postorder left", postorder(&left), perm("2413567"))?;
        expect("postorder right", postorder(&right), perm("2413567"))?;
        expect("tl(35412678)", tail_length(&perm("35412678")), 3)?;
        expect("tl(1324)", tail_length(&perm("1324")), 1)?;
        expect("tl(21453)", tail_length(&perm("21453")), 0)?;
        expect("chi_5(132)", chi(5, &perm("132")).map_err(|e| e.to_string())?, perm("86413257"))?;
        expect("chi_6(132)", chi(6, &perm("132")).map_err(|e| e.to_string())?, perm("864132579"))?;

        let vhc = |base: &str, hooks: &[(usize, usize)]| {
            ValidHookConfiguration::new(perm(base), hooks.iter().map(|&(a, b)| Hook::new(a, b)).collect())
                .map_err(|e| e.to_string())
        };
        let running = vhc("2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16", &[(2, 7), (7, 15), (9, 13)])?;
        expect("running composition", running.composition().to_string(), "(3,4,3,3)".into())?;
        expect("running type", running.partition_type().to_string(), "(4,3,3,3)".into())?;

        let before = vhc("1 2 12 3 6 4 5 7 10 8 9 11 13 14", &[(3, 14), (5, 9), (9, 13)])?;
        let after = swu_transport(&before).map_err(|e| e.to_string())?;
        expect("transport composition", before.composition().to_string(), "(3,2,3,3)".into())?;
        expect("after transport", after.composition().to_string(), "(3,2,3,3)".into())?;

        let whole = vhc("1 3 8 4 6 5 7 2 10 9 11 12 13 14 15 16", &[(3, 16), (5, 13), (7, 9), (9, 11)])?;
        let (u, s) = split_by_hook(&whole, Hook::new(5, 13)).map_err(|e| e.to_string())?;
        expect("unsheltered part", u.composition().to_string(), "(3,4)".into())?;
        expect("sheltered part", s.composition().to_string(), "(3,1,1)".into())?;
        Ok(())
    };
    let start = Instant::now();
    run()?;
    let ms = start.elapsed().as_millis();
    if ms >= 1000 {
        return Err(format!("took {ms}ms"));
    }
    Ok(format!("{ms}ms"))
}

/// The sweep must fail on `Av(231, 51423)` and nothing else may be wrong:
/// dropping the padded 1423 and 2143 seeds has to give a passing sweep.
fn known_swu_failure(why: &str) -> bool {
    why.contains("Av(231,51423)") && why.contains("Av(132,53412)") && claims(&["swu-family-sound"]).is_ok()
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, fn() -> Check)> = vec![
        ("worked examples", worked_examples),
        ("hook-configuration fertility formula and des/peak polynomial", || claims(&["vhc-fertility"])),
        ("composition injectivity and hook split", || claims(&["composition-uniqueness", "hook-split"])),
        ("zeil = min(rmax, tl of the sorted image)", || claims(&["zeil-identity"])),
        ("sliding operator bijections and rot conjugacy", || claims(&["sliding"])),
        ("theta bijection", || claims(&["theta"])),
        ("swu family sweep", || claims(&["swu-family"])),
        ("swl family sweep", || claims(&["swl-family"])),
        ("containment classes and ternary separation", || {
            claims(&["containment-fertility", "containment-not-strong", "binary-not-ternary"])
        }),
        ("Boolean-Catalan chain", || claims(&["boolean-catalan"])),
        ("Motzkin weighting", || claims(&["motzkin-weighting"])),
        ("West triple", || claims(&["west-triple"])),
    ];
    let mut failed = 0;
    let mut unexpected = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                let known = i + 1 == 7 && known_swu_failure(&why);
                if !known {
                    unexpected += 1;
                }
                let note = if known { " [known counterexample]" } else { "" };
                println!("criterion {:>2} FAIL  {name}: {why}{note}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
