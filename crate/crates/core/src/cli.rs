//! Commands over parsed instances, producing [`Report`]s and exit codes.

use std::fmt;
use std::str::FromStr;

use crate::algebra::Extension;
use crate::bialgebroid::{build_s, build_t, coaction_on_a, coaction_on_e, endo_galois, pairings};
use crate::depth_two::{analyze, D2Report, ExtensionData, Quasibase};
use crate::error::{Error, Result};
use crate::hopf::{decide_normal_via_galois, HopfAlgebra, HopfSubalgebra};
use crate::hopf_algebroid::{build_t_op_cop, find_sym_sep_element};
use crate::instance::{AlgebraBlock, Instance};
use crate::linalg::Matrix;
use crate::report::{matrix_hash, Report, Section};
use crate::weak_hopf::{
    comodule_check, frobenius_probe, galois_maps, integral_dual_bases, reconstruct_antipode, self_galois, verify_galois_identities,
    WeakBialgebra, WeakHopfAlgebra,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    CheckAlgebra,
    D2,
    Bialgebroid,
    HopfAlgebroid,
    WeakHopf,
    Galois,
    Normality,
    Reconstruct,
    All,
}

impl Command {
    pub const ALL: [Command; 9] = [
        Command::CheckAlgebra,
        Command::D2,
        Command::Bialgebroid,
        Command::HopfAlgebroid,
        Command::WeakHopf,
        Command::Galois,
        Command::Normality,
        Command::Reconstruct,
        Command::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::CheckAlgebra => "check-algebra",
            Command::D2 => "d2",
            Command::Bialgebroid => "bialgebroid",
            Command::HopfAlgebroid => "hopf-algebroid",
            Command::WeakHopf => "weak-hopf",
            Command::Galois => "galois",
            Command::Normality => "normality",
            Command::Reconstruct => "reconstruct",
            Command::All => "all",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Command> {
        Command::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| Error::UnknownCommand(s.to_string()))
    }
}

/// 0 when every check passed, 1 when one failed, 2 on input errors.
pub fn exit_code(outcome: &Result<Report>) -> i32 {
    match outcome {
        Ok(r) if r.passed() => 0,
        Ok(_) => 1,
        Err(_) => 2,
    }
}

pub fn run_command(cmd: Command, inst: &Instance) -> Result<Report> {
    let mut report = Report::new(inst.name.clone(), cmd.name());
    match cmd {
        Command::CheckAlgebra => report.sections.extend(check_algebra(inst)),
        Command::D2 => report.sections.push(d2_section(&extension(inst)?).0),
        Command::Bialgebroid => report.sections.extend(bialgebroid(inst)?),
        Command::HopfAlgebroid => report.sections.extend(hopf_algebroid(inst)?),
        Command::WeakHopf => report.sections.push(weak_hopf(inst)?),
        Command::Galois => report.sections.extend(galois(inst)?),
        Command::Normality => report.sections.extend(normality(inst)?),
        Command::Reconstruct => report.sections.push(reconstruct(inst)?),
        Command::All => {
            let mut skipped = Section::new("skipped");
            report.sections.extend(check_algebra(inst));
            for sub in &Command::ALL[1..8] {
                match run_command(*sub, inst) {
                    Ok(r) => {
                        for s in r.sections {
                            if report.section(&s.name).is_none() {
                                report.sections.push(s);
                            }
                        }
                    }
                    Err(e @ (Error::MissingBlock(_) | Error::InvalidHopf(_))) => {
                        skipped.value(sub.name(), e.to_string());
                    }
                    Err(e) => return Err(e),
                }
            }
            if !skipped.values.is_empty() {
                report.sections.push(skipped);
            }
        }
    }
    Ok(report)
}

fn extension(inst: &Instance) -> Result<ExtensionData> {
    let sub = inst.sub.as_ref().ok_or(Error::MissingBlock("sub"))?;
    Ok(ExtensionData::new(Extension::new(inst.algebra.algebra.clone(), sub)?))
}

fn algebra_section(name: &str, block: &AlgebraBlock) -> Section {
    let a = &block.algebra;
    let mut s = Section::new(name);
    s.value("field", a.field().to_string())
        .value("dim", a.dim())
        .value("dim center", a.center().dim())
        .value("commutative", a.is_commutative())
        .check("associative", a.check_associativity().is_ok())
        .check("two-sided unit", a.check_unit().is_ok());
    if let Some(g) = &block.group {
        s.value("group order", g.order());
    }
    s
}

fn check_algebra(inst: &Instance) -> Vec<Section> {
    let mut out = vec![algebra_section("algebra", &inst.algebra)];
    if let Some(sub) = &inst.sub {
        let mut s = Section::new("extension");
        match Extension::new(inst.algebra.algebra.clone(), sub) {
            Ok(ext) => {
                s.value("dim B", ext.sub().dim()).check("B is a unital subalgebra", true);
            }
            Err(_) => {
                s.check("B is a unital subalgebra", false);
            }
        }
        out.push(s);
    }
    if let Some(h) = &inst.hopf {
        out.push(algebra_section("hopf algebra", h));
    }
    out
}

fn d2_section(data: &ExtensionData) -> (Section, D2Report) {
    let rep = analyze(data);
    let mut s = Section::new("d2");
    let size = |q: &Option<Quasibase>| q.as_ref().map_or(serde_json::Value::Null, |q| q.len().into());
    s.value("dim A", data.n())
        .value("dim B", data.ext.sub().dim())
        .value("dim R", rep.dim_r)
        .value("dim S", rep.dim_s)
        .value("dim T", rep.dim_t)
        .value("dim End_B A", rep.dim_e)
        .value("dim A⊗_B A", rep.dim_tensor)
        .value("left quasibase size", size(&rep.left))
        .value("right quasibase size", size(&rep.right))
        .value("balanced", rep.balanced)
        .value("A^S = B", rep.invariants_equal_b);
    s.check("left quasibase found", rep.left.is_some());
    s.check("right quasibase found", rep.right.is_some());
    if let Some(q) = &rep.left {
        s.check("left quasibase verifies", q.verify(data));
    }
    if let Some(q) = &rep.right {
        s.check("right quasibase verifies", q.verify(data));
    }
    if rep.left.is_some() && rep.balanced {
        s.check("depth two and balanced ⇒ A^S = B", rep.invariants_equal_b);
    }
    (s, rep)
}

fn quasibases(data: &ExtensionData, sections: &mut Vec<Section>) -> Option<(Quasibase, Quasibase)> {
    let (s, rep) = d2_section(data);
    sections.push(s);
    Some((rep.left?, rep.right?))
}

fn bialgebroid(inst: &Instance) -> Result<Vec<Section>> {
    let data = extension(inst)?;
    let mut out = Vec::new();
    let Some((l, r)) = quasibases(&data, &mut out) else { return Ok(out) };
    let sb = build_s(&data, &l, &r)?;
    let mut s = Section::new("S");
    s.value("dim", data.s.dim()).value("dim base R", data.r.dim());
    s.extend("", sb.checks.clone()).extend("axioms", sb.bialgebroid.check_axioms());
    out.push(s);
    let tb = build_t(&data, &l, &r)?;
    let mut s = Section::new("T");
    s.value("dim", data.t.dim()).value("dim base R", data.r.dim());
    s.extend("", tb.checks.clone()).extend("axioms", tb.bialgebroid.check_axioms());
    out.push(s);

    let p = pairings(&data);
    let mut s = Section::new("pairings");
    s.value("angle rank on S", p.angle_rank_s)
        .value("angle rank on T", p.angle_rank_t)
        .value("bracket rank on S", p.bracket_rank_s)
        .value("bracket rank on T", p.bracket_rank_t)
        .check("⟨α|t⟩ nondegenerate", p.angle_nondegenerate())
        .check("[α|t] nondegenerate", p.bracket_nondegenerate());
    out.push(s);

    let ca = coaction_on_a(&data, &tb, &r);
    let ce = coaction_on_e(&data, &sb, &r)?;
    let mut s = Section::new("coactions");
    s.value("dim A^coT", ca.coinvariants.dim()).value("dim End_B A^coS", ce.coinvariants.dim());
    s.extend("A", ca.checks.clone()).extend("End_B A", ce.checks.clone());
    out.push(s);

    let g = endo_galois(&data, &sb, &ce, &r)?;
    let mut s = Section::new("endo-galois");
    s.value("dim domain", g.dim_domain)
        .value("dim codomain", g.dim_codomain)
        .value("dim hom", g.dim_hom)
        .value("dim dual", g.dim_dual)
        .check("β bijective", g.bijective);
    s.extend("", g.checks);
    out.push(s);
    Ok(out)
}

fn hopf_algebroid(inst: &Instance) -> Result<Vec<Section>> {
    let data = extension(inst)?;
    let mut out = Vec::new();
    let Some((l, r)) = quasibases(&data, &mut out) else { return Ok(out) };
    let tb = build_t(&data, &l, &r)?;
    let mut s = Section::new("hopf-algebroid");
    let sep = find_sym_sep_element(data.ext.sub_algebra());
    s.check("symmetric separability element of B found", sep.is_some());
    if let Some(sep) = sep {
        let h = build_t_op_cop(&data, &tb, &r, &sep)?;
        s.value("dim T", data.t.dim()).value("dim (A⊗_B A⊗_B A)^B", h.dim_triple_central).value("τ hash", matrix_hash(&h.tau));
        s.extend("", h.checks);
        if let Some(alt) = sep.alternative() {
            s.extend("other e", build_t_op_cop(&data, &tb, &r, &alt)?.checks);
        }
    }
    out.push(s);
    Ok(out)
}

fn carrier(inst: &Instance) -> Result<(WeakBialgebra, Option<Matrix>)> {
    let block = inst.coalgebra_carrier();
    let c = block.coalgebra.as_ref().ok_or(Error::MissingBlock("coalgebra"))?;
    let wb = WeakBialgebra::new(block.algebra.clone(), c.coproduct.clone(), c.counit.clone())?;
    Ok((wb, c.antipode.clone()))
}

fn weak_hopf_algebra(inst: &Instance) -> Result<WeakHopfAlgebra> {
    let (wb, s) = carrier(inst)?;
    WeakHopfAlgebra::new(wb, s.ok_or(Error::MissingBlock("antipode"))?)
}

fn weak_hopf(inst: &Instance) -> Result<Section> {
    let (wb, antipode) = carrier(inst)?;
    let mut s = Section::new("weak-hopf");
    let one = wb.algebra.unit().to_vec();
    s.value("dim", wb.dim())
        .value("ε(1)", wb.epsilon(&one).to_string())
        .value("dim H^L", wb.h_l().dim())
        .value("dim H^R", wb.h_r().dim());
    match antipode {
        Some(a) => {
            let h = WeakHopfAlgebra::new(wb, a)?;
            s.value("antipode hash", matrix_hash(&h.antipode));
            s.extend("", h.check());
            s.check("dual is a weak Hopf algebra", h.dual().check().all_passed());
        }
        None => {
            s.value("antipode", "absent");
            s.extend("", wb.check_axioms());
        }
    }
    Ok(s)
}

fn galois(inst: &Instance) -> Result<Vec<Section>> {
    let rho = inst.coaction.clone().ok_or(Error::MissingBlock("coaction"))?;
    let hopf = weak_hopf_algebra(inst)?;
    let comod = comodule_check(inst.algebra.algebra.clone(), hopf.bialgebra.clone(), rho)?;
    let mut out = Vec::new();
    let mut s = Section::new("comodule");
    s.value("dim coinvariants", comod.coinvariants.dim())
        .value("dim (A⊗H)ρ(1)", comod.corner.dim())
        .value("dim ρ(1)(A⊗H)", comod.corner_bar.dim());
    s.extend("", comod.checks.clone());
    out.push(s);

    let data = galois_maps(&comod, &hopf)?;
    let core = &data.core;
    let mut s = Section::new("galois");
    s.value("dim A⊗_B A", core.dim()).value("rank β", core.rank_beta).value("rank β′", core.rank_beta_prime);
    s.check("β bijective", core.bijective);
    s.extend("", data.checks.clone());
    out.push(s);
    if !core.bijective {
        return Ok(out);
    }

    let mut s = Section::new("identities");
    s.extend("", verify_galois_identities(core, &comod)?);
    out.push(s);

    let mut s = Section::new("integral");
    match integral_dual_bases(&comod, &hopf, core) {
        Ok(d) => {
            let probe = frobenius_probe(&comod, &d);
            s.value("dual basis size", d.a.len())
                .value("probe: trace lands in B", probe.lands_in_b)
                .value("probe: B-bimodule map", probe.bimodule_map)
                .value("probe: Frobenius dual bases", probe.dual_bases_exist);
            s.check("nondegenerate left integral found", true);
            s.extend("", d.checks);
        }
        Err(Error::NoIntegral) => {
            s.check("nondegenerate left integral found", false);
        }
        Err(e) => return Err(e),
    }
    s.check("ker β′ = 0", core.rank_beta_prime == core.dim());
    out.push(s);

    if inst.hopf.is_none() {
        let mut s = Section::new("self-galois");
        s.extend("", self_galois(&hopf)?.checks);
        out.push(s);
    }
    Ok(out)
}

fn normality(inst: &Instance) -> Result<Vec<Section>> {
    let c = inst.algebra.coalgebra.as_ref().ok_or(Error::MissingBlock("coalgebra"))?;
    let antipode = c.antipode.clone().ok_or(Error::MissingBlock("antipode"))?;
    let parent = HopfAlgebra::new(inst.algebra.algebra.clone(), c.coproduct.clone(), c.counit.clone(), antipode)?;
    let sub = HopfSubalgebra::new(parent, inst.sub.as_ref().ok_or(Error::MissingBlock("sub"))?)?;
    let witness_hopf = match (&inst.hopf, &inst.coaction) {
        (Some(h), Some(rho)) => {
            let wc = h.coalgebra.as_ref().ok_or(Error::MissingBlock("coalgebra"))?;
            let ws = wc.antipode.clone().ok_or(Error::MissingBlock("antipode"))?;
            Some((HopfAlgebra::new(h.algebra.clone(), wc.coproduct.clone(), wc.counit.clone(), ws)?, rho.clone()))
        }
        _ => None,
    };
    let verdict = decide_normal_via_galois(&sub, witness_hopf.as_ref().map(|(w, r)| (w, r)))?;
    let data = extension(inst)?;
    let mut out = Vec::new();
    let (d2, rep) = d2_section(&data);
    out.push(d2);

    let n = &verdict.normality;
    let mut s = Section::new("normality");
    s.value("dim K⁺", n.dim_k_plus)
        .value("dim HK⁺", n.dim_hk_plus)
        .value("dim K⁺H", n.dim_k_plus_h)
        .value("dim HK⁺H", n.dim_hk_plus_h)
        .value("HK⁺ = K⁺H", n.ideals_equal)
        .value("left adjoint stable", n.left_adjoint_stable)
        .value("right adjoint stable", n.right_adjoint_stable);
    s.check("K normal in H", n.normal);
    s.extend("", n.checks.clone());
    out.push(s);

    let g = &verdict.canonical;
    let mut s = Section::new("hopf-galois");
    s.value("dim H⊗_K H", g.dim_domain).value("dim H⊗H/HK⁺", g.dim_codomain).value("β descends", g.descends);
    s.check("canonical β bijective", g.descends && g.bijective);
    out.push(s);

    if let Some(w) = &verdict.witness {
        let mut s = Section::new("witness");
        s.value("dim W", w.dim_w)
            .value("β bijective", w.beta_bijective)
            .value("Φ surjective", w.phi_surjective)
            .value("rank of H over K", w.rank)
            .value("free", w.free)
            .value("dim H/K⁺H", w.dim_h_mod_k_plus_h)
            .value("dim H/HK⁺", w.dim_h_mod_hk_plus)
            .value("dimension chain", w.chain_holds);
        out.push(s);
    }

    let d2_holds = rep.left.is_some() && rep.right.is_some();
    let galois = g.descends && g.bijective;
    let mut s = Section::new("verdicts");
    s.value("depth two", d2_holds).value("normal", n.normal).value("Galois", galois);
    s.extend("", verdict.checks.clone());
    s.check("depth two ⇔ normal ⇔ Galois", d2_holds == n.normal && n.normal == galois && verdict.consistent);
    out.push(s);
    Ok(out)
}

fn reconstruct(inst: &Instance) -> Result<Section> {
    let (wb, reference) = carrier(inst)?;
    let mut s = Section::new("reconstruct");
    match reconstruct_antipode(&wb, reference.as_ref()) {
        Ok(r) => {
            s.value("antipode hash", matrix_hash(&r.antipode));
            if let Some(m) = r.matches_reference {
                s.value("matches reference", m);
            }
            s.check("H Galois over H^L", true);
            s.extend("", r.checks);
        }
        Err(Error::NotGalois) => {
            s.check("H Galois over H^L", false);
        }
        Err(e) => return Err(e),
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::catalog_instance;

    fn run(cmd: &str, name: &str) -> (i32, Report) {
        let out = run_command(cmd.parse().unwrap(), &catalog_instance(name).unwrap());
        let code = exit_code(&out);
        (code, out.unwrap())
    }

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
        assert!(matches!("frobnicate".parse::<Command>(), Err(Error::UnknownCommand(_))));
    }

    #[test]
    fn d2_on_s3_over_a3_reports_quasibase_sizes() {
        let (code, r) = run("d2", "s3-over-a3");
        assert_eq!(code, 0, "{:?}", r.failures());
        assert!(r.value("d2", "left quasibase size").unwrap().is_u64());
        assert!(r.value("d2", "right quasibase size").unwrap().is_u64());
    }

    #[test]
    fn normality_on_transposition_fails_consistently() {
        let (code, r) = run("normality", "s3-over-c2");
        assert_eq!(code, 1);
        assert_eq!(r.value("verdicts", "normal"), Some(&serde_json::Value::Bool(false)));
        assert_eq!(r.value("verdicts", "Galois"), Some(&serde_json::Value::Bool(false)));
        assert_eq!(r.section("verdicts").unwrap().checks.get("depth two ⇔ normal ⇔ Galois"), Some(true));
    }

    #[test]
    fn weak_hopf_on_groupoid_3_passes() {
        let (code, r) = run("weak-hopf", "m3-diagonal");
        assert_eq!(code, 0, "{:?}", r.failures());
    }

    #[test]
    fn missing_blocks_are_input_errors() {
        let inst = crate::instance::parse_instance("algebra matrix 2\n").unwrap();
        let out = run_command(Command::D2, &inst);
        assert!(matches!(out, Err(Error::MissingBlock("sub"))));
        assert_eq!(exit_code(&out), 2);
        assert_eq!(exit_code(&run_command(Command::All, &inst)), 0);
    }
}
