//! JSON state files.
//!
//! Every file is one object tagged by `"kind"`; complex numbers are
//! `[re, im]` pairs and angles are radians:
//!
//! ```json
//! {"kind": "pure",  "n_qubits": 2, "amplitudes": [[0.7071, 0], [0, 0], [0, 0], [0.7071, 0]]}
//! {"kind": "dicke", "amplitudes": [[0, 0], [1, 0], [0, 0], [0, 0]]}
//! {"kind": "sym3q", "g": 0.0, "t": 0.5773502691896258, "h": 0.0, "gamma": 0.0}
//! {"kind": "rank2", "gamma1": 0.7853981633974483, "gamma2": 0.7853981633974483, "x": [0, 0, -0.3333333333333333]}
//! ```

use std::fs;
use std::path::Path;

use gm_core::{PureState, RankTwoCanonical, SymThreeQubitCanonical, SymmetricDickeState, C64};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum StateFile {
    /// Dense amplitudes, qubit 0 most significant. `n_qubits` is optional
    /// on input and checked against the length when present.
    Pure {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n_qubits: Option<usize>,
        amplitudes: Vec<[f64; 2]>,
    },
    /// Amplitudes `a_0 … a_N` on the Dicke basis `|m, N⟩`.
    Dicke { amplitudes: Vec<[f64; 2]> },
    /// `g|000⟩ + t(|011⟩+|101⟩+|110⟩) + e^{iγ}h|111⟩`.
    Sym3q { g: f64, t: f64, h: f64, gamma: f64 },
    /// Two-qubit rank-two canonical state.
    Rank2 { gamma1: f64, gamma2: f64, x: [f64; 3] },
}

/// A validated state.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Pure(PureState),
    Dicke(SymmetricDickeState),
    Sym3q(SymThreeQubitCanonical),
    Rank2(RankTwoCanonical),
}

fn to_complex(pairs: &[[f64; 2]]) -> Vec<C64> {
    pairs.iter().map(|&[re, im]| C64::new(re, im)).collect()
}

fn to_pairs(amps: &[C64]) -> Vec<[f64; 2]> {
    amps.iter().map(|a| [a.re, a.im]).collect()
}

impl StateFile {
    pub fn kind(&self) -> &'static str {
        match self {
            StateFile::Pure { .. } => "pure",
            StateFile::Dicke { .. } => "dicke",
            StateFile::Sym3q { .. } => "sym3q",
            StateFile::Rank2 { .. } => "rank2",
        }
    }

    pub fn to_state(&self) -> Result<State, CliError> {
        Ok(match self {
            StateFile::Pure { n_qubits, amplitudes } => {
                let amps = to_complex(amplitudes);
                match n_qubits {
                    Some(n) => State::Pure(PureState::new(*n, amps)?),
                    None => State::Pure(PureState::from_amplitudes(amps)?),
                }
            }
            StateFile::Dicke { amplitudes } => State::Dicke(SymmetricDickeState::new(to_complex(amplitudes))?),
            StateFile::Sym3q { g, t, h, gamma } => State::Sym3q(SymThreeQubitCanonical::new(*g, *t, *h, *gamma)?),
            StateFile::Rank2 { gamma1, gamma2, x } => State::Rank2(RankTwoCanonical::new(*gamma1, *gamma2, *x)?),
        })
    }
}

impl State {
    pub fn to_file(&self) -> StateFile {
        match self {
            State::Pure(psi) => StateFile::Pure {
                n_qubits: Some(psi.n_qubits()),
                amplitudes: to_pairs(psi.amplitudes()),
            },
            State::Dicke(d) => StateFile::Dicke {
                amplitudes: to_pairs(d.amplitudes()),
            },
            State::Sym3q(s) => StateFile::Sym3q {
                g: s.g,
                t: s.t,
                h: s.h,
                gamma: s.gamma,
            },
            State::Rank2(r) => StateFile::Rank2 {
                gamma1: r.gamma1,
                gamma2: r.gamma2,
                x: r.x,
            },
        }
    }
}

pub fn parse_state(json: &str) -> Result<StateFile, serde_json::Error> {
    serde_json::from_str(json)
}

pub fn read_state_file(path: &Path) -> Result<StateFile, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    parse_state(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}
