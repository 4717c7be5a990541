//! Acceptance suite: one line per criterion, then a non-zero exit if any failed.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use aqc_codes::codes::{self, distance, qubit, syndrome, verify_code, Distance, Role};
use aqc_codes::graphs::{self, PlanarityWitness};
use aqc_codes::hamiltonians::{self, CatBasis};
use aqc_codes::sim::{self, states};
use aqc_codes::{build_6k2k2, build_gottesman, PauliString};
use common::*;

const STABILIZER_TOL: f64 = 1e-10;
const CAT_OVERLAP: f64 = 0.99;
const DRIFT_TOL: f64 = 1e-6;
const SLOPE_TARGET: f64 = 2.0;
const SLOPE_TOL: f64 = 0.3;
const BOUND_FACTOR: f64 = 10.0;
const ORBIT_TOL: f64 = 1e-12;
const ORACLE_AGREEMENT: f64 = 1e-9;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn gens_letters(c: &aqc_codes::StabilizerCode) -> Vec<Letters> {
    c.generators.iter().map(letters).collect()
}

fn code_validity() -> Check {
    for k in 1..=4 {
        let c = build_6k2k2(k).map_err(|e| e.to_string())?;
        let g = gens_letters(&c);
        ensure(g.len() == 4 * k, format!("k={k}: {} generators", g.len()))?;
        for (i, a) in g.iter().enumerate() {
            for b in &g[i + 1..] {
                ensure(commute(a, b), format!("k={k}: generators do not commute"))?;
            }
        }
        ensure(gf2_rank(&g) == 4 * k, format!("k={k}: generators dependent"))?;
        ensure(c.n - 4 * k == 2 * k && c.k == 2 * k, format!("k={k}: n−rank ≠ 2k"))?;
        let report = verify_code(&c);
        ensure(report.all_passed, format!("k={k}: verify_code {:?}", report.checks))?;
    }
    Ok("k=1..4: 4k commuting independent generators, n−4k = 2k, verify_code green".into())
}

fn distance_reproduction() -> Check {
    let mut codes_checked = Vec::new();
    for (name, c) in (1..=2)
        .map(|k| (format!("6k2k2({k})"), build_6k2k2(k)))
        .chain((1..=3).map(|k| (format!("gottesman({k})"), build_gottesman(k))))
    {
        let c = c.map_err(|e| e.to_string())?;
        let d = distance(&c, 3, codes::DEFAULT_ENUMERATION_BUDGET).map_err(|e| e.to_string())?;
        ensure(d.distance == Distance::Exact(2), format!("{name}: distance {:?}", d.distance))?;
        let g = gens_letters(&c);
        ensure(brute_distance(&g, 3) == Some(2), format!("{name}: oracle distance differs"))?;
        ensure(codes::detects_all_weight_one(&c), format!("{name}: weight-one error undetected"))?;
        let oracle_detects = all_of_weight(c.n, 1).iter().all(|e| g.iter().any(|s| !commute(s, e)));
        ensure(oracle_detects, format!("{name}: oracle finds undetected weight-one error"))?;
        codes_checked.push(name);
    }
    for k in 1..=2 {
        let c = build_6k2k2(k).map_err(|e| e.to_string())?;
        let group = group(&gens_letters(&c));
        for i in 1..=2 * k {
            for j in i + 1..=2 * k {
                let op = PauliString::x_on(c.n, &[qubit(i, Role::Zero), qubit(j, Role::Zero)]);
                let s = syndrome(&c, &op).map_err(|e| e.to_string())?;
                ensure(s.is_trivial(), format!("X({i},0)X({j},0) has syndrome {s}"))?;
                ensure(!group.contains(&letters(&op)), format!("X({i},0)X({j},0) is a stabilizer"))?;
            }
        }
    }
    Ok(format!("distance 2 on {} (library and oracle); X(i,0)X(j,0) undetectable", codes_checked.join(", ")))
}

fn logical_reduction() -> Check {
    let mut pairs = 0;
    for k in 1..=3 {
        let c = build_6k2k2(k).map_err(|e| e.to_string())?;
        let group = group(&gens_letters(&c));
        for i in 1..=2 * k {
            for j in i + 1..=2 * k {
                for (lx, role) in [('X', Role::X), ('Z', Role::Z)] {
                    let four: Vec<usize> =
                        vec![qubit(i, role), qubit(i, Role::Zero), qubit(j, role), qubit(j, Role::Zero)];
                    let op = PauliString::from_sparse(c.n, &four.iter().map(|&q| (q, lx)).collect::<Vec<_>>())
                        .map_err(|e| e.to_string())?;
                    let r = codes::reduce_logical(&c, &op).map_err(|e| e.to_string())?;
                    let want: BTreeSet<usize> = [qubit(i, Role::Zero), qubit(j, Role::Zero)].into();
                    ensure(
                        r.weight() == 2 && r.support().into_iter().collect::<BTreeSet<_>>() == want,
                        format!("k={k} {lx}̄{i}{lx}̄{j} reduced to {r}"),
                    )?;
                    ensure(
                        (0..c.n).all(|q| r.letter(q) == 'I' || r.letter(q) == lx),
                        format!("k={k}: reduced operator {r} changed letter"),
                    )?;
                    let quotient = r.multiply(&op).map_err(|e| e.to_string())?;
                    ensure(
                        c.stabilizer_decomposition(&quotient).map_err(|e| e.to_string())?.is_some(),
                        format!("k={k}: quotient {quotient} not solved by GF(2)"),
                    )?;
                    ensure(group.contains(&letters(&quotient)), "oracle rejects quotient")?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} X̄X̄/Z̄Z̄ pairs reduced to weight 2 on (i,0),(j,0); quotients in the stabilizer group"))
}

/// Independent Euler check: faces traced from the rotation system.
fn oracle_euler(rotation: &BTreeMap<usize, Vec<usize>>, edges: &[(usize, usize)]) -> bool {
    let mut darts: HashMap<(usize, usize), usize> = HashMap::new();
    for (&v, nb) in rotation {
        for (i, &w) in nb.iter().enumerate() {
            darts.insert((v, w), i);
        }
    }
    if darts.len() != 2 * edges.len() {
        return false;
    }
    let mut seen = HashSet::new();
    let mut faces = 0i64;
    for &start in darts.keys() {
        if seen.contains(&start) {
            continue;
        }
        faces += 1;
        let mut d = start;
        while seen.insert(d) {
            let (u, v) = d;
            let r = &rotation[&v];
            d = (v, r[(darts[&(v, u)] + 1) % r.len()]);
        }
    }
    let vertices = rotation.values().filter(|n| !n.is_empty()).count() as i64;
    // the encoded grid is connected
    vertices - edges.len() as i64 + faces == 2
}

fn degree_planarity() -> Check {
    let problem = hamiltonians::grid_problem(4, 4, 1).map_err(|e| e.to_string())?;
    let code = build_6k2k2(8).map_err(|e| e.to_string())?;
    let enc = hamiltonians::encode_hamiltonian(&problem, &code).map_err(|e| e.to_string())?;
    let g = graphs::encoded_interaction_graph(&enc, &code, false).map_err(|e| e.to_string())?;
    let mut deg: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for t in enc.terms() {
        if let [u, v] = t.pauli.support()[..] {
            deg.entry(u).or_default().insert(v);
            deg.entry(v).or_default().insert(u);
        }
    }
    let oracle_max = deg.values().map(|s| s.len()).max().unwrap_or(0);
    ensure(g.max_degree() == 6 && oracle_max == 6, format!("max degree {} / oracle {oracle_max}", g.max_degree()))?;
    let p = g.planarity();
    let PlanarityWitness::Embedding(e) = &p.witness else {
        return Err("encoded grid reported non-planar".into());
    };
    ensure(p.planar && e.is_valid_for(&g.edge_list()), "embedding fails validation")?;
    ensure(oracle_euler(&e.rotation, &g.edge_list()), "embedding fails oracle Euler check")?;

    let gc = build_gottesman(3).map_err(|e| e.to_string())?;
    let gg = graphs::code_operator_graph(&gc, false);
    let hub_oracle = gc
        .logical_x
        .iter()
        .chain(&gc.logical_z)
        .filter(|p| p.weight() == 2 && p.letter(0) != 'I')
        .count();
    ensure(gg.degree(0) == 6 && hub_oracle == 6 && gg.max_degree() == 6, format!("Gottesman hub degree {}", gg.degree(0)))?;
    Ok(format!(
        "encoded 4x4 grid: max degree 6, planar ({} vertices, {} edges, Euler verified); Gottesman k=3 hub degree 6",
        g.num_vertices(),
        g.num_edges()
    ))
}

fn initialization() -> Check {
    let psi = sim::build_initial_state(1).map_err(|e| e.to_string())?;
    let v = nalgebra::DVector::from_column_slice(psi.amplitudes());
    let code = build_6k2k2(1).map_err(|e| e.to_string())?;
    let pair_ops = vec![
        PauliString::x_on(6, &[qubit(1, Role::Zero), qubit(2, Role::Zero)]),
        PauliString::z_on(6, &[qubit(1, Role::Zero), qubit(2, Role::Zero)]),
    ];
    let mut worst: f64 = 0.0;
    let mut mats = Vec::new();
    for p in code.generators.iter().chain(&pair_ops) {
        let m = kron_pauli(p);
        worst = worst.max((&m * &v - &v).norm());
        mats.push(m);
    }
    ensure(worst < STABILIZER_TOL, format!("stabilizer deviation {worst:e}"))?;
    let joint_rank = projector(&mats).trace().re;
    ensure((joint_rank - 1.0).abs() < 1e-9, format!("joint projector rank {joint_rank}"))?;

    // oracle codespace: eigenvectors of the generator projector with eigenvalue 1
    let p = projector(&mats[..4]);
    let eig = p.symmetric_eigen();
    let cols: Vec<usize> = (0..64).filter(|&j| (eig.eigenvalues[j] - 1.0).abs() < 1e-9).collect();
    ensure(cols.len() == 4, format!("codespace dimension {}", cols.len()))?;
    let basis = nalgebra::DMatrix::from_fn(64, 4, |i, j| eig.eigenvectors[(i, cols[j])]);
    let h = kron_hamiltonian(&hamiltonians::initial_hamiltonian(1).map_err(|e| e.to_string())?);
    let restricted = basis.adjoint() * h * &basis;
    let re = restricted.symmetric_eigen();
    let mut order: Vec<usize> = (0..4).collect();
    order.sort_by(|&a, &b| re.eigenvalues[a].total_cmp(&re.eigenvalues[b]));
    let (e0, e1) = (re.eigenvalues[order[0]], re.eigenvalues[order[1]]);
    ensure(e1 - e0 > 1e-6, format!("codespace gap {}", e1 - e0))?;
    let ground = &basis * re.eigenvectors.column(order[0]);
    let overlap = ground.dotc(&v).norm_sqr();
    ensure((overlap - 1.0).abs() < 1e-10, format!("ground overlap {overlap}"))?;
    let lib = sim::codespace_spectrum(&hamiltonians::initial_hamiltonian(1).unwrap(), &code).map_err(|e| e.to_string())?;
    ensure(lib.ground_multiplicity == 1 && (lib.energies[0] - e0).abs() < 1e-10, "library codespace spectrum disagrees")?;
    let lib_joint = states::joint_eigenspace(6, &states::initial_state_stabilizers(1).unwrap()).map_err(|e| e.to_string())?;
    ensure(lib_joint.len() == 1, "library joint eigenspace dimension")?;
    Ok(format!(
        "max deviation {worst:.1e} over 6 operators; joint rank 1; unique codespace ground state E0={e0:.6}, gap {:.6}",
        e1 - e0
    ))
}

fn cat_preparation() -> Check {
    let runs = sim::prepare_cat_converged(4, CatBasis::Z, 1.0, 20.0, CAT_OVERLAP, 12).map_err(|e| e.to_string())?;
    let last = runs.last().expect("non-empty");
    let mut target = vec![c(0.0, 0.0); 16];
    target[0] = c(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    target[15] = c(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    let overlap = target
        .iter()
        .zip(last.state.amplitudes())
        .map(|(a, b)| a.conj() * b)
        .sum::<num_complex::Complex64>()
        .norm_sqr();
    ensure(overlap > CAT_OVERLAP, format!("overlap {overlap}"))?;
    ensure((overlap - last.target_overlap).abs() < 1e-12, "library overlap disagrees with oracle")?;
    let worst = runs.iter().map(|r| r.max_drift).fold(0.0, f64::max);
    ensure(worst < DRIFT_TOL, format!("parity drift {worst:e}"))?;
    Ok(format!(
        "T doubled to {} ({} runs): overlap {overlap:.5}, max |<XXXX>-1| = {worst:.1e}",
        last.total_time,
        runs.len()
    ))
}

fn dd_scaling() -> Check {
    let code = build_6k2k2(1).map_err(|e| e.to_string())?;
    let h = hamiltonians::encode_hamiltonian(&hamiltonians::grid_problem(1, 2, 3).unwrap(), &code)
        .map_err(|e| e.to_string())?;
    let taus = aqc_codes::cli::DEFAULT_TAUS;
    let nds = aqc_codes::cli::DEFAULT_NDS;
    let ex = sim::dd_scaling_experiment(&h, &taus, &nds).map_err(|e| e.to_string())?;
    let mut slopes = Vec::new();
    for &n_d in &nds {
        let f = ex.tau_fit(n_d).ok_or(format!("no tau fit at N_D={n_d}"))?;
        ensure((f.slope - SLOPE_TARGET).abs() <= SLOPE_TOL, format!("tau slope {} at N_D={n_d}", f.slope))?;
        slopes.push(f.slope);
    }
    for &tau in &taus {
        let f = ex.nd_fit(tau).ok_or(format!("no N_D fit at tau={tau}"))?;
        ensure((f.slope - SLOPE_TARGET).abs() <= SLOPE_TOL, format!("N_D slope {} at tau={tau}", f.slope))?;
        slopes.push(f.slope);
    }
    ensure(ex.max_bound_ratio <= BOUND_FACTOR, format!("infidelity/bound² reaches {}", ex.max_bound_ratio))?;

    // oracle trajectory for one record
    let (tau, n_d) = (taus[2], nds[0]);
    let hm = kron_hamiltonian(&h);
    let x_all = kron_letters(&['X'; 6]);
    let z_all = kron_letters(&['Z'; 6]);
    let alpha = std::f64::consts::FRAC_PI_2 / tau;
    let ctrl = |l: char| {
        (0..6).fold(nalgebra::DMatrix::zeros(64, 64), |acc, q| {
            let mut s = ['I'; 6];
            s[q] = l;
            acc + kron_letters(&s)
        })
    };
    let free = expm_hermitian(&hm, tau);
    let steps_exact = [&x_all * &free * c(0.0, -1.0), &z_all * &free * c(0.0, -1.0)];
    let steps_local = [
        expm_hermitian(&(&hm + ctrl('X') * c(alpha, 0.0)), tau),
        expm_hermitian(&(&hm + ctrl('Z') * c(alpha, 0.0)), tau),
    ];
    let psi0 = nalgebra::DVector::from_column_slice(sim::build_initial_state(1).unwrap().amplitudes());
    let (mut a, mut b) = (psi0.clone(), psi0);
    for j in 0..n_d {
        a = &steps_exact[j % 2] * a;
        b = &steps_local[j % 2] * b;
    }
    let oracle = 1.0 - a.dotc(&b).norm_sqr();
    let lib = ex
        .records
        .iter()
        .find(|r| r.tau == tau && r.n_d == n_d)
        .ok_or("record missing")?
        .infidelity;
    ensure((oracle - lib).abs() < ORACLE_AGREEMENT, format!("oracle infidelity {oracle} vs {lib}"))?;
    let (lo, hi) = slopes.iter().fold((f64::MAX, f64::MIN), |(l, h), &s| (l.min(s), h.max(s)));
    Ok(format!(
        "slopes in [{lo:.3}, {hi:.3}] over {} fits; max infidelity/bound² = {:.3} (allowed {BOUND_FACTOR}); oracle agrees",
        slopes.len(),
        ex.max_bound_ratio
    ))
}

fn first_order_decoupling() -> Check {
    let code = build_6k2k2(1).map_err(|e| e.to_string())?;
    let group = sim::universal_decoupling_group(&code).map_err(|e| e.to_string())?;
    let oracle_group = common::group(&gens_letters(&code));
    ensure(
        oracle_group.contains(&vec!['X'; 6]) && oracle_group.contains(&vec!['Z'; 6]),
        "oracle: X_all/Z_all outside the stabilizer group",
    )?;
    let check = sim::first_order_decoupling(6, &group).map_err(|e| e.to_string())?;
    ensure(check.all_cancel && check.errors_checked == 18, format!("{check:?}"))?;
    let xa = kron_letters(&['X'; 6]);
    let za = kron_letters(&['Z'; 6]);
    let elements = [nalgebra::DMatrix::identity(64, 64), xa.clone(), za.clone(), &xa * &za];
    let mut worst: f64 = 0.0;
    for e in all_of_weight(6, 1) {
        let em = kron_letters(&e);
        let sum = elements
            .iter()
            .fold(nalgebra::DMatrix::zeros(64, 64), |acc, g| acc + g * &em * g.adjoint());
        worst = worst.max(max_abs(&sum));
    }
    ensure(worst < ORBIT_TOL, format!("orbit sum entry {worst:e}"))?;
    Ok(format!("18 weight-one errors: exact sign cancellation and dense orbit sums ≤ {worst:.1e}"))
}

fn hadamard_transform() -> Check {
    let code = build_6k2k2(1).map_err(|e| e.to_string())?;
    let t = aqc_codes::cli::transform(&code).map_err(|e| e.to_string())?;
    ensure(verify_code(&t).all_passed, "transformed code fails verify_code")?;
    let d = distance(&t, 3, codes::DEFAULT_ENUMERATION_BUDGET).map_err(|e| e.to_string())?;
    ensure(d.distance == Distance::Exact(2), format!("distance {:?}", d.distance))?;
    ensure(brute_distance(&gens_letters(&t), 3) == Some(2), "oracle distance differs")?;
    let mixed: Vec<String> = t
        .generators
        .iter()
        .chain(&t.logical_x)
        .chain(&t.logical_z)
        .filter(|p| p.weight() == 2)
        .map(|p| p.support().iter().map(|&q| p.letter(q)).collect::<String>())
        .filter(|s| s == "XZ" || s == "ZX")
        .collect();
    ensure(!mixed.is_empty() && !t.css, "no XZ/ZX two-body terms")?;
    let g = graphs::code_operator_graph(&code, true);
    let graphs::BipartitionResult::Bipartite(b) = g.bipartition() else {
        return Err("operator graph not bipartite".into());
    };
    let back = graphs::hadamard_transform(&t, &b).map_err(|e| e.to_string())?;
    ensure(back == code, "double application differs from the original")?;
    Ok(format!("verify_code green, distance 2, {} XZ/ZX two-body operators, involution exact", mixed.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("code validity", code_validity, Duration::from_secs(1)),
        ("distance reproduction", distance_reproduction, Duration::from_secs(30)),
        ("logical reduction", logical_reduction, Duration::from_secs(30)),
        ("degree and planarity", degree_planarity, Duration::from_secs(30)),
        ("initialization", initialization, Duration::from_secs(10)),
        ("cat-state preparation", cat_preparation, Duration::from_secs(60)),
        ("DD scaling", dd_scaling, Duration::from_secs(300)),
        ("first-order decoupling", first_order_decoupling, Duration::from_secs(30)),
        ("Hadamard transform", hadamard_transform, Duration::from_secs(10)),
    ];
    let mut failures = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|detail| {
            if elapsed <= *limit {
                Ok(detail)
            } else {
                Err(format!("{detail}; runtime {elapsed:.2?} over {limit:?}"))
            }
        });
        match result {
            Ok(detail) => println!("criterion {} ({name}): PASS [{elapsed:.2?}] {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {} ({name}): FAIL [{elapsed:.2?}] {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
