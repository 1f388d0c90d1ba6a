//! Vector norms used as per-stage ground metrics and regularizers.

/// A per-stage vector norm.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Norm {
    /// Sum of absolute values.
    #[default]
    L1,
    /// Euclidean norm.
    L2,
    /// Maximum absolute value.
    LInf,
}

impl Norm {
    pub fn eval(&self, v: &[f64]) -> f64 {
        match self {
            Norm::L1 => v.iter().map(|x| x.abs()).sum(),
            Norm::L2 => v.iter().map(|x| x * x).sum::<f64>().sqrt(),
            Norm::LInf => v.iter().fold(0.0, |m, x| m.max(x.abs())),
        }
    }

    /// Distance between two vectors under this norm.
    pub fn dist(&self, a: &[f64], b: &[f64]) -> f64 {
        debug_assert_eq!(a.len(), b.len());
        let d: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.eval(&d)
    }

    /// The dual norm: l1 <-> linf, l2 self-dual.
    pub fn dual(&self) -> Norm {
        match self {
            Norm::L1 => Norm::LInf,
            Norm::L2 => Norm::L2,
            Norm::LInf => Norm::L1,
        }
    }

    /// A subgradient of the norm at `v`. At the origin the zero vector is
    /// returned (a valid subgradient of every norm). LInf ties resolve to
    /// the lowest index.
    pub fn subgradient(&self, v: &[f64]) -> Vec<f64> {
        let n = v.len();
        if self.eval(v) == 0.0 {
            return vec![0.0; n];
        }
        match self {
            Norm::L1 => v.iter().map(|x| x.signum() * f64::from(*x != 0.0)).collect(),
            Norm::L2 => {
                let nv = self.eval(v);
                v.iter().map(|x| x / nv).collect()
            }
            Norm::LInf => {
                let mut best = 0usize;
                for (i, x) in v.iter().enumerate() {
                    if x.abs() > v[best].abs() {
                        best = i;
                    }
                }
                let mut g = vec![0.0; n];
                g[best] = v[best].signum();
                g
            }
        }
    }
}

/// The order `p` of a transport distance or uncertainty ball.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Order {
    /// `p` in `[1, inf)`.
    Finite(f64),
    /// `p = inf`.
    Inf,
}

impl Order {
    pub fn is_valid(&self) -> bool {
        match self {
            Order::Finite(p) => p.is_finite() && *p >= 1.0,
            Order::Inf => true,
        }
    }
}

impl std::fmt::Display for Order {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Order::Finite(p) => write!(out, "{p}"),
            Order::Inf => write!(out, "inf"),
        }
    }
}

impl std::str::FromStr for Order {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "inf" | "infinity" | "oo" => Ok(Order::Inf),
            other => {
                let p: f64 = other
                    .parse()
                    .map_err(|_| format!("invalid order `{other}` (expected a number or `inf`)"))?;
                if p >= 1.0 && p.is_finite() {
                    Ok(Order::Finite(p))
                } else {
                    Err(format!("order must be in [1, inf], got {p}"))
                }
            }
        }
    }
}

impl std::fmt::Display for Norm {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Norm::L1 => "l1",
            Norm::L2 => "l2",
            Norm::LInf => "linf",
        };
        write!(out, "{name}")
    }
}

impl std::str::FromStr for Norm {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "l1" | "1" => Ok(Norm::L1),
            "l2" | "2" => Ok(Norm::L2),
            "linf" | "inf" | "max" => Ok(Norm::LInf),
            other => Err(format!("unknown norm `{other}` (expected l1, l2 or linf)")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms_and_duals() {
        let v = [3.0, -4.0];
        assert_eq!(Norm::L1.eval(&v), 7.0);
        assert_eq!(Norm::L2.eval(&v), 5.0);
        assert_eq!(Norm::LInf.eval(&v), 4.0);
        assert_eq!(Norm::L1.dual(), Norm::LInf);
        assert_eq!(Norm::LInf.dual(), Norm::L1);
        assert_eq!(Norm::L2.dual(), Norm::L2);
    }

    #[test]
    fn subgradient_at_origin_is_zero() {
        for n in [Norm::L1, Norm::L2, Norm::LInf] {
            assert_eq!(n.subgradient(&[0.0, 0.0]), vec![0.0, 0.0]);
        }
    }

    #[test]
    fn subgradient_supports_norm() {
        // g'v == ||v|| and ||g||_* <= 1 characterize norm subgradients away from 0.
        let v = [1.5, -2.0, 0.5];
        for n in [Norm::L1, Norm::L2, Norm::LInf] {
            let g = n.subgradient(&v);
            let ip: f64 = g.iter().zip(&v).map(|(a, b)| a * b).sum();
            assert!((ip - n.eval(&v)).abs() < 1e-12);
            assert!(n.dual().eval(&g) <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn linf_subgradient_breaks_ties_low() {
        let g = Norm::LInf.subgradient(&[2.0, -2.0]);
        assert_eq!(g, vec![1.0, 0.0]);
    }
}
