//! Command bodies that stream results to a writer.

use std::io::Write;

use anyhow::Result;
use geodual::format::format_set_line;
use geodual::sid::{check_strict, element_generators, partition_meets, verify_roundtrip};
use geodual::{
    compute_rank, critical_base, BergeBackend, CcmEngine, ElementSet, GroundSet, Implication, ImplicationalBase,
    MeetFamily, RankConflict, SidOptions,
};
use rayon::prelude::*;
use serde_json::json;

#[derive(Clone, Copy)]
pub struct CcmOutput {
    pub by_element: bool,
    pub mf: bool,
    pub json: bool,
}

fn labels(ground: &GroundSet, s: &ElementSet) -> Vec<String> {
    s.iter().map(|x| ground.label(x).to_string()).collect()
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs).build()?)
}

fn report_conflict(base: &ImplicationalBase, conflict: &RankConflict) {
    eprintln!("error: base is not ranked: {}", conflict.describe(base));
}

fn write_meet(out: &mut impl Write, ground: &GroundSet, j: usize, m: &ElementSet, how: CcmOutput) -> Result<()> {
    if how.json {
        let line = json!({ "element": ground.label(j), "meet": labels(ground, m) });
        writeln!(out, "{line}")?;
    } else if how.by_element {
        writeln!(out, "{}: {}", ground.label(j), format_set_line(ground, m))?;
    } else {
        writeln!(out, "{}", format_set_line(ground, m))?;
    }
    Ok(())
}

/// Streams the meets grouped by element. With more than one job the
/// per-element families are computed in parallel and printed in order.
pub fn ccm(base: &ImplicationalBase, how: CcmOutput, jobs: usize, out: &mut impl Write) -> Result<u8> {
    if let Err(conflict) = compute_rank(base) {
        report_conflict(base, &conflict);
        return Ok(2);
    }
    let engine = CcmEngine::new(base)?;
    let ground = base.ground();
    if how.mf {
        writeln!(out, "elements: {}", ground.labels().join(" "))?;
    }
    if jobs <= 1 {
        for (j, m) in engine.meet_irreducibles() {
            write_meet(out, ground, j, &m, how)?;
        }
    } else {
        let families: Vec<Vec<ElementSet>> = pool(jobs)?.install(|| {
            (0..ground.len())
                .into_par_iter()
                .map(|j| engine.j_up(j).collect())
                .collect()
        });
        for (j, family) in families.iter().enumerate() {
            for m in family {
                write_meet(out, ground, j, m, how)?;
            }
        }
    }
    Ok(0)
}

fn write_implication(out: &mut impl Write, ground: &GroundSet, imp: &Implication, json: bool) -> Result<()> {
    if json {
        let line = json!({
            "premise": labels(ground, imp.premise()),
            "conclusion": ground.label(imp.conclusion()),
        });
        writeln!(out, "{line}")?;
    } else {
        writeln!(out, "{}", imp.display(ground))?;
    }
    Ok(())
}

pub fn write_json_implications(out: &mut impl Write, base: &ImplicationalBase) -> Result<()> {
    for imp in base.implications() {
        write_implication(out, base.ground(), imp, true)?;
    }
    Ok(())
}

/// Structure identification. Without `--verify` the implications of each
/// element are printed as soon as they are known.
pub fn sid(m: &MeetFamily, options: SidOptions, json: bool, jobs: usize, out: &mut impl Write) -> Result<u8> {
    if options.strict {
        check_strict(m)?;
    }
    let ground = m.ground();
    let parts = partition_meets(m)?;
    let generators_of = |j: usize| -> Result<Vec<Implication>> {
        element_generators(m, j, &parts[j], &BergeBackend)?
            .into_iter()
            .map(|a| Ok(Implication::new(a, j)?))
            .collect()
    };

    if !options.verify && jobs <= 1 {
        if !json {
            writeln!(out, "elements: {}", ground.labels().join(" "))?;
        }
        for j in 0..ground.len() {
            for imp in generators_of(j)? {
                write_implication(out, ground, &imp, json)?;
            }
        }
        return Ok(0);
    }

    let per_element: Vec<Vec<Implication>> = if jobs <= 1 {
        (0..ground.len()).map(generators_of).collect::<Result<_>>()?
    } else {
        pool(jobs)?.install(|| {
            (0..ground.len())
                .into_par_iter()
                .map(generators_of)
                .collect::<Result<_>>()
        })?
    };
    let base = ImplicationalBase::new(ground.clone(), per_element.into_iter().flatten().collect())?;
    if options.verify {
        verify_roundtrip(&base, m)?;
    }
    if json {
        write_json_implications(out, &base)?;
    } else {
        out.write_all(geodual::format::write_imp(&base).as_bytes())?;
    }
    Ok(0)
}

pub fn rank_check(base: &ImplicationalBase, json: bool, out: &mut impl Write) -> Result<u8> {
    let ground = base.ground();
    match compute_rank(base) {
        Ok(rho) => {
            if json {
                let ranks: Vec<_> = (0..ground.len())
                    .map(|x| json!({ "element": ground.label(x), "rank": rho.rank(x) }))
                    .collect();
                writeln!(out, "{}", json!({ "ranked": true, "ranks": ranks }))?;
            } else {
                writeln!(out, "ranked")?;
                for x in 0..ground.len() {
                    writeln!(out, "{}={}", ground.label(x), rho.rank(x))?;
                }
            }
            Ok(0)
        }
        Err(conflict) => {
            let witnesses: Vec<String> = conflict
                .witness_implications
                .iter()
                .map(|imp| imp.display(ground).to_string())
                .collect();
            if json {
                let line = json!({
                    "ranked": false,
                    "element": ground.label(conflict.element),
                    "required_ranks": conflict.required_ranks,
                    "witnesses": witnesses,
                    "cycle": conflict.cycle.iter().map(|i| i.display(ground).to_string()).collect::<Vec<_>>(),
                });
                writeln!(out, "{line}")?;
            } else {
                writeln!(out, "conflict")?;
                writeln!(out, "{}", conflict.describe(base))?;
                for w in &witnesses {
                    writeln!(out, "witness: {w}")?;
                }
                for imp in &conflict.cycle {
                    writeln!(out, "cycle: {}", imp.display(ground))?;
                }
            }
            Ok(2)
        }
    }
}

/// Meets by enumeration when the base is ranked, by brute force otherwise.
pub fn meets_of(base: &ImplicationalBase) -> Result<MeetFamily> {
    let meets: Vec<ElementSet> = match CcmEngine::new(base) {
        Ok(engine) => engine.meet_irreducibles().map(|(_, m)| m).collect(),
        Err(_) => geodual::oracle::meets_brute(base)?,
    };
    Ok(MeetFamily::new(base.ground().clone(), meets)?)
}

pub fn roundtrip(base: &ImplicationalBase, out: &mut impl Write) -> Result<u8> {
    let engine = match CcmEngine::new(base) {
        Ok(engine) => engine,
        Err(geodual::Error::NotRanked(conflict)) => {
            report_conflict(base, &conflict);
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    let meets = MeetFamily::new(
        base.ground().clone(),
        engine.meet_irreducibles().map(|(_, m)| m).collect(),
    )?;
    let identified = geodual::structure_identification(&meets, SidOptions::default())?;
    let expected = critical_base(base)?;
    writeln!(out, "meets: {}", meets.len())?;
    writeln!(out, "implications: {}", identified.len())?;

    let (got, want) = (identified.implication_set(), expected.implication_set());
    if got == want {
        writeln!(out, "ok")?;
        return Ok(0);
    }
    let ground = base.ground();
    for imp in want.difference(&got) {
        writeln!(out, "missing: {}", imp.display(ground))?;
    }
    for imp in got.difference(&want) {
        writeln!(out, "extra: {}", imp.display(ground))?;
    }
    writeln!(out, "mismatch")?;
    Ok(3)
}
