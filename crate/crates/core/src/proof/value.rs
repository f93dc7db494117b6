use std::fmt;

use num_traits::One;
use serde::Serializer;

use crate::error::Result;
use crate::exact::{MultiPoly, UniPoly};
use crate::Rational;

/// An exact value appearing in a claim.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Bool(bool),
    Int(i64),
    Rat(Rational),
    /// A univariate polynomial and the name of its variable.
    Poly(UniPoly<Rational>, String),
    /// A multivariate polynomial and its variable names.
    MPoly(MultiPoly<Rational>, Vec<String>),
    List(Vec<Value>),
    Text(String),
}

impl Value {
    pub fn poly(p: UniPoly<Rational>, var: &str) -> Value {
        Value::Poly(p, var.into())
    }

    pub fn mpoly(p: MultiPoly<Rational>, vars: &[&str]) -> Value {
        Value::MPoly(p, vars.iter().map(|v| v.to_string()).collect())
    }

    pub fn list<T: Into<Value>>(items: impl IntoIterator<Item = T>) -> Value {
        Value::List(items.into_iter().map(Into::into).collect())
    }

    pub fn rat(n: i64, d: i64) -> Value {
        Value::Rat(Rational::new(n.into(), d.into()))
    }

    /// A nearby but different value of the same shape.
    pub fn mutated(&self) -> Value {
        match self {
            Value::Bool(b) => Value::Bool(!b),
            Value::Int(n) => Value::Int(n + 1),
            Value::Rat(r) => Value::Rat(r + Rational::one()),
            Value::Poly(p, v) => Value::Poly(p.clone() + UniPoly::constant(Rational::one()), v.clone()),
            Value::MPoly(p, v) => Value::MPoly(p.clone() + MultiPoly::constant(p.nvars(), Rational::one()), v.clone()),
            Value::List(items) => match items.split_first() {
                Some((first, rest)) => Value::List(std::iter::once(first.mutated()).chain(rest.iter().cloned()).collect()),
                None => Value::List(vec![Value::Int(0)]),
            },
            Value::Text(t) => Value::Text(format!("{t}?")),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Rat(r) => write!(f, "{r}"),
            Value::Poly(p, v) => f.write_str(&p.render(v)),
            Value::MPoly(p, v) => f.write_str(&p.render(&v.iter().map(String::as_str).collect::<Vec<_>>())),
            Value::List(items) => {
                f.write_str("[")?;
                for (i, x) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
            Value::Text(t) => f.write_str(t),
        }
    }
}

macro_rules! int_value {
    ($($t:ty),*) => {$(
        impl From<$t> for Value {
            fn from(n: $t) -> Value {
                Value::Int(i64::try_from(n).expect("claim integers fit in i64"))
            }
        }
    )*};
}
int_value!(i32, i64, u32, u64, usize);

impl From<bool> for Value {
    fn from(b: bool) -> Value {
        Value::Bool(b)
    }
}

impl From<Rational> for Value {
    fn from(r: Rational) -> Value {
        Value::Rat(r)
    }
}

impl From<&str> for Value {
    fn from(t: &str) -> Value {
        Value::Text(t.into())
    }
}

impl From<String> for Value {
    fn from(t: String) -> Value {
        Value::Text(t)
    }
}

impl<T: Into<Value>> From<Vec<T>> for Value {
    fn from(items: Vec<T>) -> Value {
        Value::list(items)
    }
}

pub(super) fn from_result<T: Into<Value>>(r: Result<T>) -> Value {
    match r {
        Ok(v) => v.into(),
        Err(e) => Value::Text(format!("error: {e}")),
    }
}

pub(super) fn as_string<S: Serializer>(v: &Value, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}
