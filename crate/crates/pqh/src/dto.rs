//! Serializable mirrors of the core types. Rationals travel as canonical `p` / `p/q` strings.

use serde::{Deserialize, Serialize};

use pqh_core::classify::{ClassificationReport, Flags, Witnesses};
use pqh_core::matrix::Matrix;
use pqh_core::rational::{parse_rational, Rational};
use pqh_core::uft::UftForm;
use pqh_core::{HBasisChange, Operator, SignatureTriple, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DtoError(pub String);

impl std::fmt::Display for DtoError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for DtoError {}

pub fn rat(r: &Rational) -> String {
    r.to_string()
}

pub fn parse(s: &str) -> Result<Rational, DtoError> {
    parse_rational(s).map_err(|e| DtoError(e.to_string()))
}

pub fn row(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat).collect()
}

pub fn parse_row(v: &[String]) -> Result<Vec<Rational>, DtoError> {
    v.iter().map(|s| parse(s)).collect()
}

pub fn rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| row(r)).collect()
}

pub fn parse_rows(cols: usize, v: &[Vec<String>]) -> Result<Matrix, DtoError> {
    let rs = v.iter().map(|r| parse_row(r)).collect::<Result<Vec<_>, _>>()?;
    if rs.iter().any(|r| r.len() != cols) {
        return Err(DtoError(format!("expected rows of length {cols}")));
    }
    Ok(Matrix::from_rows(cols, &rs))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceDto {
    pub ambient: usize,
    pub basis: Vec<Vec<String>>,
}

impl SubspaceDto {
    pub fn new(u: &Subspace) -> Self {
        SubspaceDto { ambient: u.ambient(), basis: u.vectors().iter().map(|v| row(v)).collect() }
    }

    pub fn to_subspace(&self) -> Result<Subspace, DtoError> {
        let m = parse_rows(self.ambient, &self.basis)?;
        Ok(Subspace::new(self.ambient, &m.to_rows()))
    }
}

pub fn operator(a: &Operator) -> Vec<String> {
    row(&a.coords())
}

pub fn parse_operator(v: &[String]) -> Result<Operator, DtoError> {
    let c = parse_row(v)?;
    if c.len() != 3 {
        return Err(DtoError("operators have three coordinates".into()));
    }
    Ok(Operator::from_coords(&c))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UftDto {
    /// Columns `h₁′, h₂′` as a 2×2 matrix.
    pub h_basis: Vec<Vec<String>>,
    pub f: SubspaceDto,
    /// `T f_j` for the basis vectors `f_j` of `F`, one row each.
    pub t_images: Vec<Vec<String>>,
}

impl UftDto {
    pub fn new(u: &UftForm) -> Self {
        UftDto {
            h_basis: rows(u.h_basis.matrix()),
            f: SubspaceDto::new(&u.f),
            t_images: u.t.to_cols().iter().map(|c| row(c)).collect(),
        }
    }

    pub fn to_uft(&self) -> Result<UftForm, DtoError> {
        let s = HBasisChange::new(parse_rows(2, &self.h_basis)?).map_err(|e| DtoError(e.to_string()))?;
        let f = self.f.to_subspace()?;
        let cols = self.t_images.iter().map(|c| parse_row(c)).collect::<Result<Vec<_>, _>>()?;
        if cols.len() != f.dim() || cols.iter().any(|c| c.len() != f.ambient()) {
            return Err(DtoError("T needs one image in E per basis vector of F".into()));
        }
        let ambient = f.ambient();
        Ok(UftForm::new(s, f, Matrix::from_cols(ambient, &cols)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagsDto {
    pub para_quaternionic: bool,
    pub pure: bool,
    pub complex: bool,
    pub weakly_para_complex: bool,
    pub para_complex: bool,
    pub nilpotent: Option<u8>,
    pub real: bool,
    pub hermitian: bool,
    pub totally_complex: bool,
    pub totally_para_complex: bool,
    pub totally_real: bool,
}

impl From<&Flags> for FlagsDto {
    fn from(f: &Flags) -> Self {
        FlagsDto {
            para_quaternionic: f.para_quaternionic,
            pure: f.pure,
            complex: f.complex,
            weakly_para_complex: f.weakly_para_complex,
            para_complex: f.para_complex,
            nilpotent: f.nilpotent,
            real: f.real,
            hermitian: f.hermitian,
            totally_complex: f.totally_complex,
            totally_para_complex: f.totally_para_complex,
            totally_real: f.totally_real,
        }
    }
}

impl From<&FlagsDto> for Flags {
    fn from(f: &FlagsDto) -> Self {
        Flags {
            para_quaternionic: f.para_quaternionic,
            pure: f.pure,
            complex: f.complex,
            weakly_para_complex: f.weakly_para_complex,
            para_complex: f.para_complex,
            nilpotent: f.nilpotent,
            real: f.real,
            hermitian: f.hermitian,
            totally_complex: f.totally_complex,
            totally_para_complex: f.totally_para_complex,
            totally_real: f.totally_real,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessesDto {
    pub complex: Option<Vec<String>>,
    pub weakly_para_complex: Option<Vec<String>>,
    pub para_complex: Option<Vec<String>>,
    pub nilpotent: Option<Vec<String>>,
}

impl From<&Witnesses> for WitnessesDto {
    fn from(w: &Witnesses) -> Self {
        WitnessesDto {
            complex: w.complex.as_ref().map(operator),
            weakly_para_complex: w.weakly_para_complex.as_ref().map(operator),
            para_complex: w.para_complex.as_ref().map(operator),
            nilpotent: w.nilpotent.as_ref().map(operator),
        }
    }
}

impl WitnessesDto {
    pub fn to_witnesses(&self) -> Result<Witnesses, DtoError> {
        let p = |o: &Option<Vec<String>>| o.as_deref().map(parse_operator).transpose();
        Ok(Witnesses {
            complex: p(&self.complex)?,
            weakly_para_complex: p(&self.weakly_para_complex)?,
            para_complex: p(&self.para_complex)?,
            nilpotent: p(&self.nilpotent)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDto {
    pub dim: usize,
    pub flags: FlagsDto,
    pub witnesses: WitnessesDto,
    pub stabilizer: Vec<Vec<String>>,
    /// `(p, s, q)`: positive, null and negative directions.
    pub signature: [usize; 3],
    pub u0: SubspaceDto,
    pub uft: Option<UftDto>,
}

impl From<&ClassificationReport> for ReportDto {
    fn from(r: &ClassificationReport) -> Self {
        ReportDto {
            dim: r.dim,
            flags: (&r.flags).into(),
            witnesses: (&r.witnesses).into(),
            stabilizer: r.stabilizer.iter().map(operator).collect(),
            signature: [r.signature.p, r.signature.s, r.signature.q],
            u0: SubspaceDto::new(&r.u0),
            uft: r.uft.as_ref().map(UftDto::new),
        }
    }
}

impl ReportDto {
    pub fn to_report(&self) -> Result<ClassificationReport, DtoError> {
        Ok(ClassificationReport {
            dim: self.dim,
            flags: (&self.flags).into(),
            witnesses: self.witnesses.to_witnesses()?,
            stabilizer: self.stabilizer.iter().map(|o| parse_operator(o)).collect::<Result<_, _>>()?,
            signature: SignatureTriple::new(self.signature[0], self.signature[1], self.signature[2]),
            u0: self.u0.to_subspace()?,
            uft: self.uft.as_ref().map(UftDto::to_uft).transpose()?,
        })
    }
}

/// One summand of a decomposition together with its own classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddendDto {
    pub kind: String,
    /// `h` for decomposable addends `h ⊗ F′`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub direction: Option<Vec<String>>,
    /// Irreducible factor behind a generic addend.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
    pub subspace: SubspaceDto,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub uft: Option<UftDto>,
    pub report: ReportDto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDto {
    pub mode: String,
    pub addends: Vec<AddendDto>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureDto {
    pub p: usize,
    pub s: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum UftResultDto {
    Found(UftDto),
    Missing { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDto {
    pub x: usize,
    pub y: usize,
    /// `I, J, K` of the admissible basis used, as operator coordinates.
    pub basis: [Vec<String>; 3],
    /// `(q0, q1, q2, q3)` of `X·Y = q0 + q1 i + q2 j + q3 k`.
    pub value: Vec<String>,
    pub norm_im: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StandardizationDto {
    pub m: usize,
    /// Columns are the images of `h₁⊗e₁, …, h₁⊗e_m, h₂⊗e₁, …, h₂⊗e_m`; stored row by row.
    pub basis: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleDto {
    pub seed: u64,
    pub samples: usize,
    pub confirmations: usize,
    pub violations: Vec<String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use pqh_core::classify::classify;
    use pqh_core::gen::{generate, Kind};
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn report_round_trips_through_json() {
        for (i, kind) in Kind::ALL.into_iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(i as u64);
            let inst = generate(&mut rng, 1 + i % 2, kind);
            let report = classify(&inst.space, &inst.subspace);
            let text = serde_json::to_string(&ReportDto::from(&report)).unwrap();
            let back: ReportDto = serde_json::from_str(&text).unwrap();
            assert_eq!(back.to_report().unwrap(), report, "{kind}");
        }
    }

    #[test]
    fn rationals_are_canonical() {
        let r = parse("-6/4").unwrap();
        assert_eq!(rat(&r), "-3/2");
        assert_eq!(rat(&parse("4/2").unwrap()), "2");
        assert!(parse("0.5").is_err());
        assert!(parse("1/0").is_err());
    }
}
