//! Turns command-line selectors into catalog-style cases.

use std::fs;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::Args;
use fusion_product::catalog::{case_by_name, standard_catalog, CatalogCase, ExpectedFlags};
use fusion_product::group::parse::ParsedGroup;
use fusion_product::group::subgroup::sylow_in;
use fusion_product::group::{is_prime, order_cap_from_env, Subgroup};

#[derive(Args, Debug)]
pub struct InstanceArgs {
    /// Group definition file.
    #[arg(long, conflicts_with = "case")]
    group: Option<PathBuf>,
    #[arg(long)]
    prime: Option<u32>,
    /// Name of a subgroup in the group file, or a word list.
    #[arg(long)]
    normal: Option<String>,
    /// `sylow`, a subgroup name, or a word list.
    #[arg(long, default_value = "sylow")]
    carrier: String,
    /// `catalog:NAME` or `catalog:all`.
    #[arg(long)]
    case: Option<String>,
}

impl InstanceArgs {
    pub fn resolve(&self) -> Result<Vec<CatalogCase>> {
        if let Some(sel) = &self.case {
            let name = sel.strip_prefix("catalog:").unwrap_or(sel);
            return if name == "all" {
                Ok(standard_catalog())
            } else {
                let case = case_by_name(name).ok_or_else(|| anyhow!("no catalog case named {name:?}"))?;
                Ok(vec![case])
            };
        }
        let Some(path) = &self.group else {
            bail!("give either --case or --group");
        };
        let prime = self.prime.ok_or_else(|| anyhow!("--prime is required with --group"))?;
        if !is_prime(prime) {
            bail!("{prime} is not prime");
        }
        let normal = self
            .normal
            .as_deref()
            .ok_or_else(|| anyhow!("--normal is required with --group"))?;
        let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let parsed = ParsedGroup::from_text(&text, order_cap_from_env()).with_context(|| path.display().to_string())?;
        let group = parsed.group.clone();
        let whole = Subgroup::whole(&group);
        let n = parsed.select(normal).with_context(|| format!("--normal {normal}"))?;
        if !n.is_normal_in(&group, &whole) {
            bail!("{normal} is not a normal subgroup, so F_(S∩N)(N) is not a normal subsystem");
        }
        let sylow = sylow_in(&group, &whole, prime);
        let carrier = if self.carrier == "sylow" {
            sylow.clone()
        } else {
            parsed
                .select(&self.carrier)
                .with_context(|| format!("--carrier {}", self.carrier))?
        };
        let case = CatalogCase {
            name: "input",
            description: "group file",
            group,
            normal: n,
            prime,
            sylow,
            carrier,
            expected: ExpectedFlags {
                oracle_equal: true,
                saturated: true,
                op_identity: true,
            },
        };
        case.validate()?;
        Ok(vec![case])
    }
}
