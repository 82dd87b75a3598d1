//! Group specifications from flags or JSON files, and λ parsing.

use crate::CliError;
use hermsig::linalg::{IntVec, Rat};
use hermsig::realform::{gl_split_to_fundamental, sl_split_to_character, Grading};
use hermsig::{builtin_group, GroupLabel, HighestWeightSpec, RealForm};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// `{"builtin": "GL", "params": {"n": 3}}` or `{"custom": {...}}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpecFile {
    Builtin(BuiltinFile),
    Custom(CustomFile),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuiltinFile {
    pub builtin: String,
    #[serde(default)]
    pub params: BuiltinParams,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomFile {
    pub custom: CustomGroup,
}

impl GroupSpecFile {
    /// Parses with diagnostics naming the offending line or field.
    pub fn parse(text: &str) -> Result<Self, String> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
        let obj = v.as_object().ok_or("top level must be an object")?;
        if obj.contains_key("builtin") {
            serde_json::from_value(v).map(GroupSpecFile::Builtin).map_err(|e| format!("builtin spec: {e}"))
        } else if obj.contains_key("custom") {
            serde_json::from_value(v).map(GroupSpecFile::Custom).map_err(|e| format!("custom spec: {e}"))
        } else {
            Err("expected a \"builtin\" or \"custom\" field".into())
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuiltinParams {
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
    /// Cartan type such as "A2", for compact and complex groups.
    #[serde(rename = "type")]
    pub cartan_type: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CustomGroup {
    #[serde(default = "default_name")]
    pub name: String,
    pub rank: usize,
    pub roots: Vec<IntVec>,
    pub coroots: Vec<IntVec>,
    pub theta: Vec<IntVec>,
    /// "c" or "n" for each θ-fixed root, in the order the roots are listed.
    pub grading: Vec<String>,
}

fn default_name() -> String {
    "custom".into()
}

/// How `--lambda` is read for a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LambdaConvention {
    /// GL(n): a decreasing n-vector on the split Cartan.
    GlSplit(usize),
    /// SL(n): a decreasing n-vector on the split Cartan, up to shifts.
    SlSplit,
    /// A character of the built-in torus.
    Character,
    /// Custom groups: λ_c in T_c coordinates.
    TcCoordinates,
}

pub struct Group {
    pub rf: RealForm,
    pub convention: LambdaConvention,
}

fn validation(msg: impl Into<String>) -> CliError {
    CliError::validation(msg)
}

pub fn builtin_label(name: &str, params: &BuiltinParams) -> Result<GroupLabel, CliError> {
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| validation(format!("builtin {name} needs {what}")));
    let parse_type = |t: &Option<String>| -> Result<(char, usize), CliError> {
        let t = t.as_deref().ok_or_else(|| validation(format!("builtin {name} needs a type such as A2")))?;
        let mut c = t.chars();
        let fam = c.next().map(|f| f.to_ascii_uppercase()).ok_or_else(|| validation("empty type"))?;
        let rank = c.as_str().parse().map_err(|_| validation(format!("bad type {t}")))?;
        Ok((fam, rank))
    };
    Ok(match name.to_ascii_lowercase().as_str() {
        "gl" => GroupLabel::GL(need(params.n, "n")?),
        "sl" => GroupLabel::SL(need(params.n, "n")?),
        "sp" => GroupLabel::Sp(need(params.n, "n (the group is Sp(2n,R))")?),
        "psp" => GroupLabel::PSp(need(params.n, "n (the group is PSp(2n,R))")?),
        "pso" => GroupLabel::PSO(need(params.n, "n (the group is PSO(2n,2n))")?),
        "so" => GroupLabel::SO(need(params.p, "p")?, need(params.q, "q")?),
        "e6" => GroupLabel::SplitE6,
        "compact" => {
            let (f, r) = parse_type(&params.cartan_type)?;
            GroupLabel::Compact(f, r)
        }
        "complex" => {
            let (f, r) = parse_type(&params.cartan_type)?;
            GroupLabel::Complex(f, r)
        }
        _ => {
            return Err(validation(format!(
                "unknown builtin {name}; expected GL, SL, Sp, PSp, PSO, SO, E6, compact or complex"
            )))
        }
    })
}

pub fn group_from_label(label: GroupLabel) -> Result<Group, CliError> {
    let convention = match label {
        GroupLabel::GL(n) => LambdaConvention::GlSplit(n),
        GroupLabel::SL(_) => LambdaConvention::SlSplit,
        _ => LambdaConvention::Character,
    };
    let rf = builtin_group(&label).map_err(CliError::from_lib)?;
    Ok(Group { rf, convention })
}

pub fn group_from_file(path: &Path) -> Result<Group, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| validation(format!("cannot read {}: {e}", path.display())))?;
    let spec = GroupSpecFile::parse(&text).map_err(|e| validation(format!("{}: {e}", path.display())))?;
    group_from_spec(&spec)
}

pub fn group_from_spec(spec: &GroupSpecFile) -> Result<Group, CliError> {
    match spec {
        GroupSpecFile::Builtin(BuiltinFile { builtin, params }) => group_from_label(builtin_label(builtin, params)?),
        GroupSpecFile::Custom(CustomFile { custom }) => {
            let grading = custom
                .grading
                .iter()
                .enumerate()
                .map(|(i, g)| match g.as_str() {
                    "c" => Ok(Grading::Compact),
                    "n" => Ok(Grading::Noncompact),
                    other => Err(validation(format!("custom.grading[{i}]: expected \"c\" or \"n\", got {other:?}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let rf = RealForm::custom(
                &custom.name,
                custom.rank,
                custom.roots.clone(),
                custom.coroots.clone(),
                custom.theta.clone(),
                grading,
            )
            .map_err(CliError::from_lib)?;
            Ok(Group { rf, convention: LambdaConvention::TcCoordinates })
        }
    }
}

pub fn parse_ints(s: &str) -> Result<IntVec, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| validation(format!("bad integer {x:?} in {s:?}"))))
        .collect()
}

pub fn parse_rats(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',')
        .map(|x| x.trim().parse::<Rat>().map_err(|_| validation(format!("bad rational {x:?} in {s:?}"))))
        .collect()
}

/// Turns user λ into a highest-weight specification for the group.
pub fn highest_weight(group: &Group, lambda: &[i64], nu: Option<&[Rat]>) -> Result<HighestWeightSpec, CliError> {
    let rf = &group.rf;
    let rank = rf.datum().rank();
    let check_len = |want: usize| {
        if lambda.len() != want {
            Err(validation(format!("--lambda has {} entries, expected {want}", lambda.len())))
        } else {
            Ok(())
        }
    };
    let mut spec = match group.convention {
        LambdaConvention::GlSplit(n) => gl_split_to_fundamental(n, lambda).map_err(CliError::from_lib)?,
        LambdaConvention::SlSplit => {
            check_len(rank + 1)?;
            rf.spec_from_character(&sl_split_to_character(lambda).map_err(CliError::from_lib)?)
        }
        LambdaConvention::Character => {
            check_len(rank)?;
            rf.spec_from_character(lambda)
        }
        LambdaConvention::TcCoordinates => {
            check_len(rf.compact_rank())?;
            HighestWeightSpec::new(lambda.to_vec(), rf.split_rank())
        }
    };
    if let Some(nu) = nu {
        if nu.len() != spec.nu_re.len() {
            return Err(validation(format!("--nu has {} entries, expected {}", nu.len(), spec.nu_re.len())));
        }
        spec.nu_re = nu.to_vec();
    }
    Ok(spec)
}
