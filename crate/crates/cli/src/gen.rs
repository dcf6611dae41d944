use std::path::PathBuf;

use clap::{Args, ValueEnum};
use cycle_spectra::constructions::{
    catalog, gnk_meets_hypothesis, make_dn, make_fan_ring, make_gnk, make_hk, random_c3cp, triangle_expand,
};
use cycle_spectra::Embedding;

use crate::input::{encode, format_for, write_bytes};
use crate::report::{Exit, Failure};
use crate::Format;

#[derive(Clone, Copy, ValueEnum)]
pub enum Family {
    /// The gadget H_k with its four degree-2 ports.
    Hk,
    /// The frame D_n.
    Dn,
    /// G(n, k) = D_n with every matching edge replaced by H_{k-1}.
    Gnk,
    /// A 3k-cycle with k hubs on consecutive rim triples.
    Fanring,
    /// Every vertex of a catalog graph replaced by a triangle.
    Triexpand,
    /// Seeded random 3-connected cubic plane graph on n vertices.
    Random,
    /// A named fixture.
    Catalog,
}

#[derive(Args)]
pub struct GenArgs {
    family: Family,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Catalog name, for `catalog` and `triexpand`.
    #[arg(long)]
    name: Option<String>,
    #[arg(short = 'o', long = "output")]
    output: Option<PathBuf>,
    /// Output format; by default `.pc` files get planar_code and
    /// everything else JSON.
    #[arg(long)]
    to: Option<Format>,
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{family} needs --{flag}")))
}

pub fn build(args: &GenArgs) -> Result<Embedding, Failure> {
    Ok(match args.family {
        Family::Hk => {
            let k = need(args.k, "k", "hk")?;
            if k < 1 {
                return Err(Failure::Usage("hk needs k >= 1".into()));
            }
            make_hk(k).gadget
        }
        Family::Dn => {
            let n = need(args.n, "n", "dn")?;
            if n < 3 {
                return Err(Failure::Usage("dn needs n >= 3".into()));
            }
            make_dn(n).embedding
        }
        Family::Gnk => {
            let (n, k) = (need(args.n, "n", "gnk")?, need(args.k, "k", "gnk")?);
            if n >= 3 && k >= 2 && !gnk_meets_hypothesis(n, k) {
                eprintln!("warning: n = {n} < 4k+2 = {}; the gap is only claimed for larger n", 4 * k + 2);
            }
            make_gnk(n, k)?
        }
        Family::Fanring => {
            let k = need(args.k, "k", "fanring")?;
            if k < 2 {
                return Err(Failure::Usage("fanring needs k >= 2".into()));
            }
            make_fan_ring(k)
        }
        Family::Triexpand => triangle_expand(&catalog(args.name.as_deref().unwrap_or("dodecahedron"))?)?,
        Family::Random => random_c3cp(need(args.n, "n", "random")?, args.seed)?,
        Family::Catalog => {
            let name = args.name.as_deref().ok_or_else(|| Failure::Usage("catalog needs --name".into()))?;
            catalog(name)?
        }
    })
}

pub fn run(args: GenArgs) -> Result<Exit, Failure> {
    let g = build(&args)?;
    let to = args.to.unwrap_or_else(|| format_for(args.output.as_deref()));
    write_bytes(&encode(&[&g], to)?, args.output.as_deref())?;
    Ok(Exit::Ok)
}
