use std::fmt;

/// Propositional constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Constant {
    E,
    F,
    Bot,
    Top,
}

impl Constant {
    pub fn symbol(self) -> &'static str {
        match self {
            Constant::E => "e",
            Constant::F => "f",
            Constant::Bot => "bot",
            Constant::Top => "top",
        }
    }
}

/// Binary connectives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connective {
    And,
    Or,
    Fusion,
    LDiv,
    RDiv,
}

impl Connective {
    pub fn symbol(self) -> &'static str {
        match self {
            Connective::And => "&",
            Connective::Or => "|",
            Connective::Fusion => "*",
            Connective::LDiv => "\\",
            Connective::RDiv => "/",
        }
    }

    /// Binding strength; larger binds tighter.
    pub(crate) fn precedence(self) -> u8 {
        match self {
            Connective::Or => 1,
            Connective::And => 2,
            Connective::LDiv | Connective::RDiv => 3,
            Connective::Fusion => 4,
        }
    }

    pub(crate) fn is_associative(self) -> bool {
        !matches!(self, Connective::LDiv | Connective::RDiv)
    }
}

/// Formula AST. Variables are stored 0-based and printed as `x1, x2, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(usize),
    Const(Constant),
    Binary(Connective, Box<Formula>, Box<Formula>),
}

impl Formula {
    /// The variable printed as `x{index + 1}`.
    pub fn var(index: usize) -> Formula {
        Formula::Var(index)
    }

    pub fn constant(c: Constant) -> Formula {
        Formula::Const(c)
    }

    pub fn binary(op: Connective, lhs: Formula, rhs: Formula) -> Formula {
        Formula::Binary(op, Box::new(lhs), Box::new(rhs))
    }

    pub fn and(self, rhs: Formula) -> Formula {
        Formula::binary(Connective::And, self, rhs)
    }

    pub fn or(self, rhs: Formula) -> Formula {
        Formula::binary(Connective::Or, self, rhs)
    }

    pub fn fuse(self, rhs: Formula) -> Formula {
        Formula::binary(Connective::Fusion, self, rhs)
    }

    /// `self \ rhs`
    pub fn ldiv(self, rhs: Formula) -> Formula {
        Formula::binary(Connective::LDiv, self, rhs)
    }

    /// `self / rhs`
    pub fn rdiv(self, rhs: Formula) -> Formula {
        Formula::binary(Connective::RDiv, self, rhs)
    }

    /// `¬φ := φ \ f`
    pub fn not(self) -> Formula {
        self.ldiv(Formula::Const(Constant::F))
    }

    /// `φ ↔ ψ := (φ \ ψ) ∧ (ψ \ φ)`
    pub fn iff(self, rhs: Formula) -> Formula {
        self.clone().ldiv(rhs.clone()).and(rhs.ldiv(self))
    }

    /// `(x1 \ e) <-> ((x1 * x1) \ e)`
    pub fn fin_axiom() -> Formula {
        let x = Formula::var(0);
        let e = Formula::Const(Constant::E);
        x.clone().ldiv(e.clone()).iff(x.clone().fuse(x).ldiv(e))
    }

    /// One more than the largest variable index, or 0 without variables.
    pub fn num_vars(&self) -> usize {
        match self {
            Formula::Var(i) => i + 1,
            Formula::Const(_) => 0,
            Formula::Binary(_, l, r) => l.num_vars().max(r.num_vars()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::Const(_) => 1,
            Formula::Binary(_, l, r) => 1 + l.size() + r.size(),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(i) => write!(f, "x{}", i + 1),
            Formula::Const(c) => f.write_str(c.symbol()),
            Formula::Binary(op, l, r) => {
                write_operand(f, l, *op, false)?;
                write!(f, " {} ", op.symbol())?;
                write_operand(f, r, *op, true)
            }
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, child: &Formula, parent: Connective, right: bool) -> fmt::Result {
    let wrap = match child {
        Formula::Binary(op, _, _) => {
            let (c, p) = (op.precedence(), parent.precedence());
            c < p || (c == p && (right || !parent.is_associative() || *op != parent))
        }
        _ => false,
    };
    if wrap {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}
