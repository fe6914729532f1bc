//! The registered verification checks: every theorem, proposition and
//! fact of the combinatorics, each run exhaustively at a given size.

use std::collections::{BTreeSet, HashMap};
use std::time::Instant;

use genocchi::dellac::{binom2, enumerate_dellac, htilde, switching_graph, DellacConfig};
use genocchi::dumont::{orbit_canonical, phi, phi_via_tau};
use genocchi::histories::{
    big_phi, big_psi, count_histories, enumerate_dyck, enumerate_histories, histories_for_path,
    history_weight, validate_history, weight_exponent, weight_mu,
};
use genocchi::permutations::{
    enumerate_dumont, is_normalized_dumont, st, transposition_compose, DumontClass, Perm, Side,
};
use genocchi::qpolys::{cbar, cfrac_coeffs, lambda_seq, lambda_weights, QPoly};
use genocchi::sequences::{normalized_h, SeidelTriangle};
use genocchi::{Error, Result};
use num_bigint::BigInt;

/// Outcome of one check run at one size.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check_name: String,
    pub n: usize,
    pub total_objects: BigInt,
    pub pass: bool,
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn status(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }
}

/// Registry entry: supported size range and the sizes `verify --all`
/// exercises by default (taken from the statements being verified).
pub struct CheckInfo {
    pub name: &'static str,
    pub about: &'static str,
    pub min_n: usize,
    pub max_n: usize,
    pub default_ns: &'static [usize],
}

pub const CHECKS: &[CheckInfo] = &[
    CheckInfo {
        name: "seidel-recurrence",
        about: "both Seidel recurrences hold entrywise on rows 1..=n",
        min_n: 1,
        max_n: 2000,
        default_ns: &[40],
    },
    CheckInfo {
        name: "h-divisibility",
        about: "2^k divides the median Genocchi number H_{2k+1} for k <= n",
        min_n: 0,
        max_n: 600,
        default_ns: &[20],
    },
    CheckInfo {
        name: "dc-count",
        about: "|DC(n)| equals the normalized median Genocchi number h_n",
        min_n: 1,
        max_n: 8,
        default_ns: &[1, 2, 3, 4, 5, 6, 7],
    },
    CheckInfo {
        name: "phi-bijection",
        about: "phi maps DC(n) bijectively onto the normalized Dumont permutations of order 2n+2",
        min_n: 1,
        max_n: 6,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "phi-statistic",
        about: "st(phi(C)) = binom(n,2) - inv(C) for every configuration",
        min_n: 1,
        max_n: 7,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "tau-agreement",
        about: "the refined-statistics algorithm reproduces phi on all of DC(n)",
        min_n: 1,
        max_n: 7,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "orbit-structure",
        about: "the transposition action splits Dumont permutations into 2^n-orbits with one normalized member",
        min_n: 1,
        max_n: 6,
        default_ns: &[1, 2, 3, 4],
    },
    CheckInfo {
        name: "switch-facts",
        about: "switchability criterion and the inversion behaviour of switches, for every (C, i)",
        min_n: 1,
        max_n: 7,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "switch-connectivity",
        about: "the switching graph on DC(n) is connected",
        min_n: 1,
        max_n: 7,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "history-count",
        about: "|DH(n)| = h_n, by enumeration and by the per-step choice-count product",
        min_n: 0,
        max_n: 7,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "Phi-roundtrip",
        about: "Psi inverts Phi on DC(n) and Phi inverts Psi on DH(n)",
        min_n: 1,
        max_n: 7,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "Phi-weight",
        about: "the history weight of Phi(C) is q^(binom(n,2) - inv(C))",
        min_n: 1,
        max_n: 7,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "fiber-sum",
        about: "history weights above each fixed path sum to the lambda-weighted path weight",
        min_n: 0,
        max_n: 7,
        default_ns: &[1, 2, 3, 4, 5],
    },
    CheckInfo {
        name: "lambda-lemma",
        about: "the triangular q-power sum equals the closed form of lambda_{2p-1}, for p <= n",
        min_n: 1,
        max_n: 200,
        default_ns: &[10],
    },
    CheckInfo {
        name: "cfrac-agreement",
        about: "the truncated continued fraction reproduces cbar_{m+1} as the t^m coefficient, m <= n",
        min_n: 0,
        max_n: 10,
        default_ns: &[6],
    },
    CheckInfo {
        name: "cbar-three-ways",
        about: "cbar(n+1) from the Gandhi recursion, the st sum, the Dellac sum, the path sum and the continued fraction all agree",
        min_n: 1,
        max_n: 6,
        default_ns: &[1, 2, 3, 4, 5, 6],
    },
    CheckInfo {
        name: "dc3-table",
        about: "the n=3 correspondence table reproduces the seven golden permutations",
        min_n: 3,
        max_n: 3,
        default_ns: &[3],
    },
];

pub fn check_info(name: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Runs one named check at size `n`.
pub fn run_check(name: &str, n: usize) -> Result<VerificationReport> {
    let info = check_info(name).ok_or_else(|| {
        Error::InvalidArgument(format!(
            "unknown check {:?}; known checks: {}",
            name,
            CHECKS.iter().map(|c| c.name).collect::<Vec<_>>().join(", ")
        ))
    })?;
    if n < info.min_n || n > info.max_n {
        return Err(Error::OutOfRange(format!(
            "check {} supports {} <= n <= {}, got {}",
            name, info.min_n, info.max_n, n
        )));
    }
    let start = Instant::now();
    let (total, counterexample) = dispatch(name, n)?;
    Ok(VerificationReport {
        check_name: name.to_string(),
        n,
        pass: counterexample.is_none(),
        total_objects: total,
        counterexample,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

type Outcome = (BigInt, Option<String>);

fn dispatch(name: &str, n: usize) -> Result<Outcome> {
    Ok(match name {
        "seidel-recurrence" => seidel_recurrence(n),
        "h-divisibility" => h_divisibility(n),
        "dc-count" => dc_count(n)?,
        "phi-bijection" => phi_bijection(n),
        "phi-statistic" => phi_statistic(n),
        "tau-agreement" => tau_agreement(n),
        "orbit-structure" => orbit_structure(n)?,
        "switch-facts" => switch_facts(n),
        "switch-connectivity" => switch_connectivity(n)?,
        "history-count" => history_count(n)?,
        "Phi-roundtrip" => phi_psi_roundtrip(n)?,
        "Phi-weight" => phi_weight(n)?,
        "fiber-sum" => fiber_sum(n)?,
        "lambda-lemma" => lambda_lemma(n)?,
        "cfrac-agreement" => cfrac_agreement(n)?,
        "cbar-three-ways" => cbar_three_ways(n)?,
        "dc3-table" => dc3_table()?,
        other => unreachable!("unregistered check {}", other),
    })
}

fn seidel_recurrence(max_i: usize) -> Outcome {
    let t = SeidelTriangle::new(max_i);
    let mut checked = 0u64;
    for i in 2..=max_i {
        for j in 1..=i.div_ceil(2) {
            checked += 1;
            let expected = if i % 2 == 1 {
                t.get(i, j - 1) + t.get(i - 1, j)
            } else {
                t.get(i - 1, j) + t.get(i, j + 1)
            };
            if t.get(i, j) != expected {
                return (
                    BigInt::from(checked),
                    Some(format!("recurrence fails at g_{{{},{}}}", i, j)),
                );
            }
        }
    }
    (BigInt::from(checked), None)
}

fn h_divisibility(max_n: usize) -> Outcome {
    for k in 0..=max_n {
        if let Err(e) = normalized_h(k) {
            return (BigInt::from(k), Some(e.to_string()));
        }
    }
    (BigInt::from(max_n + 1), None)
}

fn dc_count(n: usize) -> Result<Outcome> {
    let count = BigInt::from(enumerate_dellac(n).len());
    let expected = normalized_h(n)?;
    Ok(if count == expected {
        (count, None)
    } else {
        (
            count.clone(),
            Some(format!(
                "|DC({})| = {} but h_{} = {}",
                n, count, n, expected
            )),
        )
    })
}

fn phi_bijection(n: usize) -> Outcome {
    let configs = enumerate_dellac(n);
    let total = BigInt::from(configs.len());
    let mut images: BTreeSet<Perm> = BTreeSet::new();
    for c in &configs {
        let sigma = phi(c);
        if !images.insert(sigma.clone()) {
            return (total, Some(format!("phi is not injective at C = {}", c)));
        }
    }
    let normalized: BTreeSet<Perm> = enumerate_dumont(n + 1, DumontClass::NormalizedDumont)
        .into_iter()
        .collect();
    if images != normalized {
        let missing = normalized.difference(&images).next();
        let extra = images.difference(&normalized).next();
        return (
            total,
            Some(format!(
                "image mismatch: missing {:?}, extra {:?}",
                missing.map(|p| p.to_string()),
                extra.map(|p| p.to_string())
            )),
        );
    }
    (total, None)
}

fn phi_statistic(n: usize) -> Outcome {
    let configs = enumerate_dellac(n);
    let total = BigInt::from(configs.len());
    for c in &configs {
        let got = st(&phi(c)).expect("phi output has even order");
        let want = (binom2(n) - c.inv()) as i64;
        if got != want {
            return (
                total,
                Some(format!(
                    "st(phi({})) = {} but binom - inv = {}",
                    c, got, want
                )),
            );
        }
    }
    (total, None)
}

fn tau_agreement(n: usize) -> Outcome {
    let configs = enumerate_dellac(n);
    let total = BigInt::from(configs.len());
    for c in &configs {
        if phi(c) != phi_via_tau(c) {
            return (total, Some(format!("algorithms disagree at C = {}", c)));
        }
    }
    (total, None)
}

fn orbit_structure(n: usize) -> Result<Outcome> {
    let all = enumerate_dumont(n + 1, DumontClass::All);
    let total = BigInt::from(all.len());
    let mut orbits: HashMap<Perm, Vec<Perm>> = HashMap::new();
    for sigma in &all {
        let canon = orbit_canonical(sigma)?;
        // constancy along every generator
        for j in 1..=n {
            let moved = transposition_compose(sigma, 2 * j, 2 * j + 1, Side::Left)?;
            if orbit_canonical(&moved)? != canon {
                return Ok((
                    total,
                    Some(format!(
                        "canonical form not constant on the orbit of {}",
                        sigma
                    )),
                ));
            }
        }
        orbits.entry(canon).or_default().push(sigma.clone());
    }
    for (canon, members) in &orbits {
        if members.len() != 1 << n {
            return Ok((
                total,
                Some(format!(
                    "orbit of {} has size {} instead of {}",
                    canon,
                    members.len(),
                    1 << n
                )),
            ));
        }
        let normalized = members
            .iter()
            .filter(|m| is_normalized_dumont(m).unwrap())
            .count();
        if normalized != 1 {
            return Ok((
                total,
                Some(format!(
                    "orbit of {} holds {} normalized members",
                    canon, normalized
                )),
            ));
        }
    }
    Ok((total, None))
}

fn switch_facts(n: usize) -> Outcome {
    let configs = enumerate_dellac(n);
    let mut checked = 0u64;
    for c in &configs {
        for i in 1..2 * n {
            checked += 1;
            // ground truth: the swapped tableau is valid iff the criterion says so
            let mut swapped = c.col().to_vec();
            swapped.swap(i - 1, i);
            let valid = DellacConfig::new(n, swapped).is_ok();
            let claimed = c.is_switchable(i).unwrap();
            let fail = |msg: String| (BigInt::from(checked), Some(msg));
            if claimed != valid {
                return fail(format!("switchability criterion wrong at ({}, {})", c, i));
            }
            if i == n && !claimed {
                return fail(format!("not switchable at n for C = {}", c));
            }
            let inverted = c.column_of(i + 1) < c.column_of(i);
            if inverted && !claimed {
                return fail(format!("inversion not switchable at ({}, {})", c, i));
            }
            if !claimed {
                continue;
            }
            let s = c.switch(i).unwrap();
            if s.switch(i).unwrap() != *c {
                return fail(format!("switch not an involution at ({}, {})", c, i));
            }
            let delta = s.inv() as i64 - c.inv() as i64;
            if delta.abs() > 1 {
                return fail(format!("inversion jump {} at ({}, {})", delta, c, i));
            }
            if c.column_of(i) == c.column_of(i + 1) && s != *c {
                return fail(format!("same-column switch changed C = {}", c));
            }
            if inverted && delta != -1 {
                return fail(format!(
                    "inversion switch delta {} at ({}, {})",
                    delta, c, i
                ));
            }
        }
    }
    (BigInt::from(checked), None)
}

fn switch_connectivity(n: usize) -> Result<Outcome> {
    let g = switching_graph(n);
    let total = BigInt::from(g.vertex_count());
    if BigInt::from(g.vertex_count()) != normalized_h(n)? {
        return Ok((total, Some("vertex count differs from h_n".into())));
    }
    Ok(if g.is_connected() {
        (total, None)
    } else {
        (total, Some("switching graph is disconnected".into()))
    })
}

fn history_count(n: usize) -> Result<Outcome> {
    let enumerated = enumerate_histories(n);
    let total = BigInt::from(enumerated.len());
    if let Some(bad) = enumerated.iter().find(|h| !validate_history(h)) {
        return Ok((total, Some(format!("enumerated invalid history {}", bad))));
    }
    let by_product = count_histories(n);
    let expected = normalized_h(n)?;
    Ok(if total != by_product {
        (
            total.clone(),
            Some(format!(
                "enumeration gives {} but the choice-count product gives {}",
                total, by_product
            )),
        )
    } else if total != expected {
        (
            total.clone(),
            Some(format!(
                "|DH({})| = {} but h_{} = {}",
                n, total, n, expected
            )),
        )
    } else {
        (total, None)
    })
}

fn phi_psi_roundtrip(n: usize) -> Result<Outcome> {
    let configs = enumerate_dellac(n);
    let histories = enumerate_histories(n);
    let total = BigInt::from(configs.len() + histories.len());
    for c in &configs {
        if big_psi(&big_phi(c))? != *c {
            return Ok((total, Some(format!("Psi(Phi(C)) != C at C = {}", c))));
        }
    }
    for h in &histories {
        if big_phi(&big_psi(h)?) != *h {
            return Ok((total, Some(format!("Phi(Psi(S)) != S at S = {}", h))));
        }
    }
    Ok((total, None))
}

fn phi_weight(n: usize) -> Result<Outcome> {
    let configs = enumerate_dellac(n);
    let total = BigInt::from(configs.len());
    for c in &configs {
        let got = weight_exponent(&big_phi(c))?;
        let want = binom2(n) - c.inv();
        if got != want {
            return Ok((
                total,
                Some(format!("weight exponent {} != {} at C = {}", got, want, c)),
            ));
        }
    }
    Ok((total, None))
}

fn fiber_sum(n: usize) -> Result<Outcome> {
    let lambda = lambda_weights(n.max(1))?;
    let paths = enumerate_dyck(n);
    let total = BigInt::from(paths.len());
    for path in &paths {
        let mut acc = QPoly::zero();
        for h in histories_for_path(path) {
            acc = &acc + &history_weight(&h)?;
        }
        if acc != weight_mu(path, &lambda)? {
            return Ok((total, Some(format!("fiber sum mismatch above {}", path))));
        }
    }
    Ok((total, None))
}

fn lambda_lemma(max_p: usize) -> Result<Outcome> {
    for p in 1..=max_p {
        let mut acc = QPoly::zero();
        for n2 in 0..p {
            for n1 in 0..=n2 {
                acc = &acc + &QPoly::monomial(2 * p - 2 - n1 - n2);
            }
        }
        if acc != lambda_seq(2 * p - 1)? {
            return Ok((
                BigInt::from(p),
                Some(format!("identity fails at p = {}", p)),
            ));
        }
    }
    Ok((BigInt::from(max_p), None))
}

fn cfrac_agreement(n: usize) -> Result<Outcome> {
    let weights = lambda_weights(n)?;
    let coeffs = cfrac_coeffs(&weights, n + 1)?;
    for (m, coeff) in coeffs.iter().enumerate() {
        if *coeff != cbar(m + 1)? {
            return Ok((
                BigInt::from(n + 1),
                Some(format!("t^{} coefficient differs from cbar({})", m, m + 1)),
            ));
        }
    }
    Ok((BigInt::from(n + 1), None))
}

fn cbar_three_ways(n: usize) -> Result<Outcome> {
    let reference = cbar(n + 1)?;
    let normalized = enumerate_dumont(n + 1, DumontClass::NormalizedDumont);
    let total = BigInt::from(normalized.len());

    let mut st_route = QPoly::zero();
    for sigma in &normalized {
        st_route = &st_route + &QPoly::monomial(st(sigma)? as usize);
    }
    let dellac_route = htilde(n);
    let lambda = lambda_weights(n.max(1))?;
    let mut path_route = QPoly::zero();
    for path in enumerate_dyck(n) {
        path_route = &path_route + &weight_mu(&path, &lambda)?;
    }
    let cf_route = cfrac_coeffs(&lambda, n + 1)?.swap_remove(n);

    for (route, value) in [
        ("st sum over normalized Dumont permutations", st_route),
        ("Dellac inversion sum", dellac_route),
        ("lambda-weighted path sum", path_route),
        ("continued-fraction coefficient", cf_route),
    ] {
        if value != reference {
            return Ok((
                total,
                Some(format!(
                    "{} gives {} but cbar({}) = {}",
                    route,
                    value,
                    n + 1,
                    reference
                )),
            ));
        }
    }
    Ok((total, None))
}

fn dc3_table() -> Result<Outcome> {
    let rows = crate::table::emit_table(3)?;
    let total = BigInt::from(rows.len());
    let got: BTreeSet<String> = rows.iter().map(|r| r.phi.to_string()).collect();
    let golden: BTreeSet<String> = [
        "41736285", "41736582", "71436285", "71436582", "51436287", "21736584", "21436587",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    Ok(if got == golden {
        (total, None)
    } else {
        (
            total,
            Some(format!(
                "table column {:?} differs from the golden set",
                got
            )),
        )
    })
}
