use qframes::coeff::LaurentPoly;
use qframes::ncalg::{Generator, NcPoly};
use qframes::spinops::{pauli_expr, prob_op, OperatorMatrix, Outcome};
use qframes::{GaussRational, Poly, System};

use crate::ast::{Builtin, Expr, ExprKind};
use crate::CliError;

/// An algebra element or a 2×2 matrix of them. Values are kept in their
/// defining (unrewritten) form until the caller normalizes.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Poly),
    Matrix(OperatorMatrix<GaussRational>),
}

impl Value {
    pub fn normalize(&self, sys: &System) -> Result<Value, CliError> {
        Ok(match self {
            Value::Scalar(p) => Value::Scalar(sys.normalize(p)?),
            Value::Matrix(m) => Value::Matrix(m.normalize(sys)?),
        })
    }

    pub fn render(&self, sys: &System) -> String {
        match self {
            Value::Scalar(p) => sys.render(p),
            Value::Matrix(m) => {
                let row = |r: &[Poly; 2]| format!("[{}, {}]", sys.render(&r[0]), sys.render(&r[1]));
                format!("[{}, {}]", row(&m.entries[0]), row(&m.entries[1]))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Scalar(p) => p.is_empty(),
            Value::Matrix(m) => m.is_zero(),
        }
    }

    fn as_matrix(&self) -> OperatorMatrix<GaussRational> {
        match self {
            Value::Matrix(m) => m.clone(),
            Value::Scalar(p) => OperatorMatrix::identity().map(|e| e * p),
        }
    }
}

fn add(a: Value, b: Value, sign: i64) -> Value {
    let s = LaurentPoly::constant(GaussRational::from_ints(sign, 0));
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(&x + &y.scale(&s)),
        (a, b) => Value::Matrix(a.as_matrix().zip(&b.as_matrix(), |x, y| x + &y.scale(&s))),
    }
}

fn mul(a: &Value, b: &Value) -> Value {
    match (a, b) {
        (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x * y),
        (Value::Scalar(x), Value::Matrix(m)) => Value::Matrix(m.map(|e| x * e)),
        (Value::Matrix(m), Value::Scalar(y)) => Value::Matrix(m.map(|e| e * y)),
        (Value::Matrix(m), Value::Matrix(n)) => Value::Matrix(m.matmul(n)),
    }
}

fn generator(e: &Expr, sys: &System) -> Result<Generator, CliError> {
    let ExprKind::Gen(g) = &e.kind else { unreachable!("generator node") };
    sys.generator(g.letter, g.index, g.starred).ok_or_else(|| {
        CliError::Usage(format!("{}: generator {}{} is not in the system", e.pos, g.letter, g.index))
    })
}

/// Evaluates `e` over `sys` without normalizing.
pub fn eval(e: &Expr, sys: &System) -> Result<Value, CliError> {
    Ok(match &e.kind {
        ExprKind::Rational(r) => Value::Scalar(NcPoly::scalar(LaurentPoly::constant(GaussRational::real(r.clone())))),
        ExprKind::Imag => Value::Scalar(NcPoly::scalar(LaurentPoly::constant(GaussRational::from_ints(0, 1)))),
        ExprKind::QPow(n) => Value::Scalar(NcPoly::scalar(LaurentPoly::q_pow(*n))),
        ExprKind::Gen(_) => Value::Scalar(NcPoly::gen(generator(e, sys)?)),
        ExprKind::Builtin(b, i) => match b {
            Builtin::PUp => Value::Scalar(prob_op(*i, Outcome::Up, sys)?.raw),
            Builtin::PDown => Value::Scalar(prob_op(*i, Outcome::Down, sys)?.raw),
            Builtin::Sigma => Value::Matrix(pauli_expr(*i, sys)?),
        },
        ExprKind::Neg(a) => add(Value::Scalar(NcPoly::zero()), eval(a, sys)?, -1),
        ExprKind::Add(a, b) => add(eval(a, sys)?, eval(b, sys)?, 1),
        ExprKind::Sub(a, b) => add(eval(a, sys)?, eval(b, sys)?, -1),
        ExprKind::Mul(a, b) => mul(&eval(a, sys)?, &eval(b, sys)?),
        ExprKind::Bracket(a, b) => {
            let (x, y) = (eval(a, sys)?, eval(b, sys)?);
            add(mul(&x, &y), mul(&y, &x), -1)
        }
        ExprKind::Star(a) => match eval(a, sys)? {
            Value::Scalar(p) => Value::Scalar(p.star()),
            Value::Matrix(m) => Value::Matrix(m.dagger()),
        },
    })
}
