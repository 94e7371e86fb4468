use std::path::Path;

use ncschur::catalog::Catalog;
use ncschur::colouring::{cover_avoids, quad_counts, schur_number, SchurOptions};
use ncschur::corners::{
    build_tripartite, corner_count, triangle_count, witness_finder, ShiftRegistry, WitnessOptions,
};
use ncschur::neumann::{build_cover, default_eta, NeumannArtifacts, NeumannParams};
use ncschur::rational::{fmt_decimal, fmt_fraction, BigInt};
use ncschur::stats::{commuting_probability, count_commuting_pairs, is_abelian};
use ncschur::{Cover, Error, GroupTable, Limits, PairSet, Rational, Result};

use crate::{Command, ParamRange, Report};

pub fn execute(cmd: &Command) -> Result<Report> {
    let catalog = Catalog::default();
    let limits = Limits::default();
    let group = |spec: &str| catalog.load(spec, &limits);
    match cmd {
        Command::Info { group: spec } => info(&group(spec)?),
        Command::Cprob { group: spec } => cprob(&group(spec)?),
        Command::Quads { group: spec, cover } => {
            let g = group(spec)?;
            quads(&g, &read_cover(cover, &g)?)
        }
        Command::Schur {
            group: spec,
            kmax,
            budget,
        } => schur(&group(spec)?, *kmax, *budget),
        Command::CoverBuild {
            group: spec,
            epsilon,
            eta,
            nu,
            out,
        } => {
            let g = group(spec)?;
            let params = params_for(&g, epsilon.clone(), eta.clone(), nu.clone())?;
            let art = build_cover(&g, &params, &limits)?;
            cover_build(&art, out.as_deref())
        }
        Command::CoverCheck { group: spec, cover } => {
            let g = group(spec)?;
            cover_check(&g, &read_cover(cover, &g)?)
        }
        Command::Corners { group: spec, pairs } => {
            let g = group(spec)?;
            corners(&g, &read_pairs(pairs, &g)?)
        }
        Command::Witness {
            group: spec,
            cover,
            seed,
            trials,
            shifts,
        } => {
            let g = group(spec)?;
            let c = read_cover(cover, &g)?;
            let opts = WitnessOptions {
                seed: *seed,
                trials: *trials,
                strategy: shifts.clone(),
            };
            witness(&g, &c, &opts)
        }
        Command::Trend {
            family,
            range,
            budget,
            kmax,
        } => trend(&catalog, &limits, family, range, *budget, *kmax),
        Command::Catalog => Ok(list_catalog(&catalog)),
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn with_path(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { .. } => Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        },
        other => other,
    }
}

fn check_order(found: usize, g: &GroupTable) -> Result<()> {
    if found != g.order() {
        return Err(Error::OrderMismatch {
            expected: g.order(),
            found,
        });
    }
    Ok(())
}

fn read_cover(path: &Path, g: &GroupTable) -> Result<Cover> {
    let c = Cover::parse(&read_text(path)?).map_err(|e| with_path(path, e))?;
    check_order(c.group_order(), g)?;
    Ok(c)
}

fn read_pairs(path: &Path, g: &GroupTable) -> Result<PairSet> {
    let p = PairSet::parse(&read_text(path)?).map_err(|e| with_path(path, e))?;
    check_order(p.n(), g)?;
    Ok(p)
}

fn join(items: impl IntoIterator<Item = usize>) -> String {
    items
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn info(g: &GroupTable) -> Result<Report> {
    let rep = commuting_probability(g);
    let abelian = is_abelian(g);
    let (c, dec) = (fmt_fraction(&rep.c), fmt_decimal(&rep.c));
    let mut r = Report::new();
    r.kv("name", g.name())
        .kv("order", g.order())
        .kv("abelian", abelian)
        .kv("classes", rep.num_classes)
        .kv("c", &c)
        .kv("c_decimal", &dec);
    r.line(format!(
        "order={} abelian={abelian} classes={} c={c}",
        g.order(),
        rep.num_classes
    ))
    .line(format!("{}: c(G) ~ {dec}", g.name()));
    Ok(r)
}

fn cprob(g: &GroupTable) -> Result<Report> {
    let direct = count_commuting_pairs(g);
    let rep = commuting_probability(g);
    let via_classes = (rep.num_classes * rep.order) as u64;
    let (c, dec) = (fmt_fraction(&rep.c), fmt_decimal(&rep.c));
    let mut r = Report::new();
    r.kv("order", rep.order)
        .kv("pairs_total", rep.pairs_total)
        .kv("pairs_commuting", direct)
        .kv("classes", rep.num_classes)
        .kv("pairs_via_classes", via_classes)
        .kv("agree", direct == via_classes)
        .kv("c", &c)
        .kv("c_decimal", &dec);
    r.line(format!("group {} of order {}", g.name(), rep.order))
        .line(format!(
            "commuting pairs: {direct} of {} (pair loop)",
            rep.pairs_total
        ))
        .line(format!(
            "classes x order: {} x {} = {via_classes} (agree={})",
            rep.num_classes,
            rep.order,
            direct == via_classes
        ))
        .line(format!("c = {c} ~ {dec}"));
    Ok(r)
}

fn quads(g: &GroupTable, cover: &Cover) -> Result<Report> {
    let q = quad_counts(g, cover)?;
    let mut r = Report::new();
    r.kv("classes", cover.len());
    r.line(format!(
        "{:>5} {:>6} {:>10} {:>14}",
        "class", "size", "quadruples", "noncommuting"
    ));
    for (i, ((total, nc), class)) in q.per_class.iter().zip(cover.classes()).enumerate() {
        r.kv(
            format!("class.{i}"),
            format!("size={} total={total} noncommuting={nc}", class.len()),
        );
        r.line(format!("{i:>5} {:>6} {total:>10} {nc:>14}", class.len()));
    }
    match &q.witness {
        Some(w) => {
            r.kv("witness", format!("class={} x={} y={}", w.class, w.x, w.y));
            r.line(format!("witness: class {} x={} y={}", w.class, w.x, w.y));
        }
        None => {
            r.kv("witness", "none");
            r.line("no non-commuting monochromatic quadruple");
        }
    }
    Ok(r)
}

fn schur(g: &GroupTable, kmax: usize, budget: u64) -> Result<Report> {
    let res = schur_number(
        g,
        &SchurOptions {
            k_max: kmax,
            node_budget: budget,
        },
    )?;
    let mut r = Report::new();
    r.kv("k", res.k_value)
        .kv("complete", res.complete)
        .kv("nodes", res.nodes)
        .kv("symmetry_prunes", res.symmetry_prunes)
        .kv(
            "certificate",
            if res.from_cosets { "cosets" } else { "search" },
        );
    if res.complete {
        r.line(format!(
            "k(G) = {} (exhaustive, {} nodes)",
            res.k_value, res.nodes
        ));
    } else {
        r.line(format!(
            "k(G) >= {} (search stopped after {} nodes)",
            res.k_value, res.nodes
        ));
    }
    r.line(format!("symmetry prunes: {}", res.symmetry_prunes));
    if let Some(c) = &res.avoiding_colouring {
        let source = if res.from_cosets {
            "cosets of an Abelian normal subgroup"
        } else {
            "found by search"
        };
        r.line(format!(
            "avoiding colouring with {} classes ({source}):",
            c.len()
        ));
        for (i, class) in c.classes().iter().enumerate() {
            r.kv(format!("colour.{i}"), join(class.iter()));
            r.line(format!("  {i}: {}", join(class.iter())));
        }
    }
    Ok(r)
}

fn params_for(
    g: &GroupTable,
    epsilon: Option<Rational>,
    eta: Option<Rational>,
    nu: Option<Rational>,
) -> Result<NeumannParams> {
    let epsilon = epsilon.unwrap_or_else(|| commuting_probability(g).c);
    let mut params = NeumannParams::for_epsilon(epsilon)?;
    if let Some(e) = eta {
        params.eta = e;
    } else {
        params.eta = default_eta(&params.epsilon)?;
    }
    if let Some(v) = nu {
        params.nu = v;
    }
    params.validate()?;
    Ok(params)
}

fn cover_build(art: &NeumannArtifacts, out: Option<&Path>) -> Result<Report> {
    let mut r = Report::new();
    for (k, v) in art.transcript() {
        r.kv(k, &v);
        r.line(format!("{k:>15}: {v}"));
    }
    r.kv("avoids", true);
    r.line("        avoids: true");
    let text = art.cover.to_text();
    match out {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| Error::Io {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            r.kv("cover_file", path.display());
            r.line(format!("cover written to {}", path.display()));
        }
        None => {
            for (i, class) in art.cover.classes().iter().enumerate() {
                r.kv(format!("cover.{i}"), join(class.iter()));
            }
            r.line("");
            for l in text.lines() {
                r.line(l);
            }
        }
    }
    Ok(r)
}

fn cover_check(g: &GroupTable, cover: &Cover) -> Result<Report> {
    let mut r = Report::new();
    match cover_avoids(g, cover)? {
        None => {
            r.kv("avoids", true);
            r.line("avoids=true");
        }
        Some(w) => {
            let (xy, yx) = (g.mul(w.x, w.y), g.mul(w.y, w.x));
            r.kv("avoids", false)
                .kv("class", w.class)
                .kv("x", w.x)
                .kv("y", w.y)
                .kv("xy", xy)
                .kv("yx", yx);
            r.line("avoids=false").line(format!(
                "class {} holds x={} y={} xy={xy} yx={yx}",
                w.class, w.x, w.y
            ));
        }
    }
    Ok(r)
}

fn corners(g: &GroupTable, a: &PairSet) -> Result<Report> {
    let n = g.order() as u64;
    let count = corner_count(g, a);
    let t = build_tripartite(g, a);
    let triangles = triangle_count(&t);
    let edges = t.edge_counts();
    let ok = triangles == count && edges.iter().all(|&e| e == a.len());
    let verdict = if ok { "ok" } else { "mismatch" };
    let s = format!("{count}/{}", n * n * n);
    let s_dec = format!("{:.6}", count as f64 / (n * n * n) as f64);
    let mut r = Report::new();
    r.kv("pairs", a.len())
        .kv("S", &s)
        .kv("S_decimal", &s_dec)
        .kv("triangles", triangles)
        .kv("edges", format!("{},{},{}", edges[0], edges[1], edges[2]))
        .kv("bijection", verdict);
    r.line(format!("S={s} triangles={triangles} bijection={verdict}"))
        .line(format!(
            "|A|={} edges={}/{}/{} S~{s_dec}",
            a.len(),
            edges[0],
            edges[1],
            edges[2]
        ));
    Ok(r)
}

fn witness(g: &GroupTable, cover: &Cover, opts: &WitnessOptions) -> Result<Report> {
    let t = witness_finder(g, cover, opts, &ShiftRegistry::default())?;
    let mut r = Report::new();
    for (k, v) in t.lines() {
        r.line(format!("{k}: {v}"));
        r.kv(k, v);
    }
    Ok(r)
}

/// One row of the `trend` table.
struct TrendRow {
    param: u64,
    order: usize,
    c: Rational,
    cover_size: usize,
    size_bound: BigInt,
    k: Option<(usize, bool)>,
}

fn trend(
    catalog: &Catalog,
    limits: &Limits,
    family: &str,
    range: &ParamRange,
    budget: u64,
    kmax: usize,
) -> Result<Report> {
    let fam = catalog
        .get(family)
        .or_else(|| catalog.families().find(|f| f.alias() == family))
        .ok_or_else(|| Error::UnknownFamily(family.into()))?;
    let mut rows = Vec::new();
    let mut skipped = Vec::new();
    for p in range.values() {
        let g = match fam.build(Some(p), limits) {
            Ok(g) => g,
            Err(Error::BadParameter { .. }) if matches!(range, ParamRange::Span(..)) => {
                skipped.push(p as usize);
                continue;
            }
            Err(e) => return Err(e),
        };
        let c = commuting_probability(&g).c;
        let params = NeumannParams::for_epsilon(c.clone())?;
        let art = build_cover(&g, &params, limits)?;
        let k = if is_abelian(&g) {
            None
        } else {
            let res = schur_number(
                &g,
                &SchurOptions {
                    k_max: kmax,
                    node_budget: budget,
                },
            )?;
            Some((res.k_value, res.complete))
        };
        rows.push(TrendRow {
            param: p,
            order: g.order(),
            c,
            cover_size: art.cover.len(),
            size_bound: art.size_bound.clone(),
            k,
        });
    }

    // Walk the rows from large to small c; the bound and k must not drop.
    let mut by_c: Vec<&TrendRow> = rows.iter().collect();
    by_c.sort_by(|a, b| b.c.cmp(&a.c));
    let mut consistent = true;
    for w in by_c.windows(2) {
        let (hi, lo) = (w[0], w[1]);
        if hi.c == lo.c {
            continue;
        }
        if lo.size_bound < hi.size_bound {
            consistent = false;
        }
        if let (Some((k_hi, true)), Some((k_lo, true))) = (hi.k, lo.k) {
            if k_lo < k_hi {
                consistent = false;
            }
        }
    }

    let k_text = |k: Option<(usize, bool)>| match k {
        None => "-".to_string(),
        Some((v, true)) => v.to_string(),
        Some((v, false)) => format!(">={v}"),
    };
    let mut r = Report::new();
    r.kv("family", fam.name())
        .kv("columns", "param,order,c,c_decimal,cover_size,size_bound,k");
    r.line(format!(
        "{:>6} {:>6} {:>10} {:>10} {:>6} {:>14} {:>5}",
        "n", "|G|", "c(G)", "~c", "cover", "size bound", "k(G)"
    ));
    for row in &rows {
        let (c, dec) = (fmt_fraction(&row.c), fmt_decimal(&row.c));
        let k = k_text(row.k);
        r.kv(
            format!("row.{}", row.param),
            format!(
                "{},{c},{dec},{},{},{k}",
                row.order, row.cover_size, row.size_bound
            ),
        );
        r.line(format!(
            "{:>6} {:>6} {c:>10} {dec:>10} {:>6} {:>14} {k:>5}",
            row.param, row.order, row.cover_size, row.size_bound
        ));
    }
    if !skipped.is_empty() {
        r.kv("skipped", join(skipped.iter().copied()));
        r.line(format!(
            "skipped (not valid for {}): {}",
            fam.name(),
            join(skipped)
        ));
    }
    r.kv("consistent", consistent);
    r.line(format!(
        "as c(G) decreases, size bound and k(G) never decrease: {consistent}"
    ));
    Ok(r)
}

fn list_catalog(catalog: &Catalog) -> Report {
    let mut r = Report::new();
    for f in catalog.families() {
        let order = if f.takes_parameter() {
            format!("{}<n>", f.alias())
        } else {
            f.alias().to_string()
        };
        r.kv(f.name(), format!("{order} {}", f.summary()));
        r.line(format!("{:<12} {:<6} {}", f.name(), order, f.summary()));
    }
    r
}
