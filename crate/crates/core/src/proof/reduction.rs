//! From the 4-clique bound to one of three forbidden configurations: an
//! SRG(40,12,2,4) with 4-regular splits, a 16-coclique, or a K6,10.

use num_traits::{One, Zero};

use super::heavy::dots76;
use super::{Ctx, Value};
use crate::counting::{edge_matrix_around_edge, frequency_solutions, FrequencyProfile};
use crate::error::{Error, Result};
use crate::euclid::*;
use crate::exact::{EigenSign, Matrix, UniPoly};
use crate::params::{derive_spectrum, representation_dots, RepDots, Side, SrgParams};
use crate::zonal::{k4_lower_bound, representation_dimension, ZonalPoly};
use crate::Rational;

pub(super) fn p76() -> SrgParams {
    SrgParams::new(76, 30, 8, 14).expect("valid parameters")
}

pub(super) fn dual76() -> RepDots {
    representation_dots(&p76(), Side::DualInF).expect("rational dots")
}

pub(super) fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(super) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Polynomial in `w` from ascending `(numerator, denominator)` coefficients.
pub(super) fn pw(coeffs: &[(i64, i64)]) -> Value {
    Value::poly(UniPoly::new(coeffs.iter().map(|&(n, d)| r(n, d)).collect()), "w")
}

pub(super) fn e(c: i64) -> EdgeCount {
    EdgeCount::known(c)
}

pub(super) fn ew(c0: i64, c1: i64) -> EdgeCount {
    EdgeCount::affine(c0, c1)
}

pub(super) fn spec(sizes: &[u64], upper: &[&[EdgeCount]]) -> PartitionSpec {
    PartitionSpec::from_upper(sizes, upper).expect("partition data is consistent")
}

pub(super) fn det_value(s: &PartitionSpec, d: &RepDots) -> Value {
    Value::poly(gram_determinant(s, d), "w")
}

/// Integers `w` in `lo..=hi` at which the Gram matrix is positive
/// semidefinite.
pub(super) fn feasible(s: &PartitionSpec, d: &RepDots, lo: i64, hi: i64) -> Value {
    Value::list(psd_w_range_strict(s, d, lo, hi))
}

pub(super) fn kernel_at(s: &PartitionSpec, d: &RepDots, w: i64) -> Result<KernelCertificate> {
    kernel_certificate(s, d, w)
}

pub(super) fn lambda_value(k: &Result<KernelCertificate>) -> Result<Value> {
    k.clone().map(|k| Value::list(k.lambda))
}

fn known(xs: &[Option<i64>]) -> Vec<Option<Rational>> {
    xs.iter().map(|x| x.map(int)).collect()
}

pub(super) fn solve_count(k: &Result<KernelCertificate>, sizes: &[u64], d: &RepDots, member: Option<usize>, xs: &[Option<i64>]) -> Result<Rational> {
    let k = k.clone()?;
    lincomb_solve(&k, sizes, d, member, &known(xs))
}

fn ints(xs: &[i64]) -> Value {
    Value::list(xs.iter().copied())
}

fn rats(xs: &[(i64, i64)]) -> Value {
    Value::list(xs.iter().map(|&(n, d)| r(n, d)))
}

fn surd_int(x: &crate::exact::QuadSurd) -> Result<i64> {
    let q = x.to_rational().ok_or_else(|| Error::Internal("irrational spectrum".into()))?;
    if !q.is_integer() {
        return Err(Error::Internal(format!("non-integral value {q}")));
    }
    i64::try_from(q.to_integer()).map_err(|_| Error::Internal("value out of range".into()))
}

pub(super) fn spectrum(ctx: &mut Ctx) {
    let sp = derive_spectrum(&p76());
    ctx.exact("r", "positive eigenvalue r", 2, surd_int(&sp.r));
    ctx.exact("s", "negative eigenvalue s", -8, surd_int(&sp.s));
    ctx.exact("f", "multiplicity f of r", 57, surd_int(&sp.f));
    ctx.exact("g", "multiplicity g of s", 18, surd_int(&sp.g));
    let d = dots76();
    ctx.exact("primal-dots", "(p, q) of the representation in R^18", rats(&[(-4, 15), (7, 45)]), Ok(Value::list([d.p, d.q])));
    let d = dual76();
    ctx.exact("dual-dots", "(p, q) of the dual representation in R^57", rats(&[(1, 15), (-1, 15)]), Ok(Value::list([d.p, d.q])));
}

pub(super) fn zonal(ctx: &mut Ctx) {
    ctx.exact("dimension", "dimension of the representation", 18, representation_dimension(&p76()));
    let z = ZonalPoly::<Rational>::new(18, 4).map(|z| Value::poly(z.poly, "x"));
    let expected = Value::poly(UniPoly::new(vec![int(54), int(0), int(-2160), int(0), int(7920)]), "x");
    ctx.exact("z18-4", "Z_{18,4}(x)", expected, z);
}

pub(super) fn k4_bound(ctx: &mut Ctx) {
    let b = k4_lower_bound(&p76(), 4);
    let raw = b.as_ref().map_err(Clone::clone).and_then(|b| b.raw_bound.clone().ok_or(Error::Internal("vacuous bound".into())));
    ctx.exact("raw", "raw lower bound on the number of 4-cliques", r(2128, 55), raw);
    let ceil = b.as_ref().map_err(Clone::clone).and_then(|b| {
        b.integer_bound.as_ref().and_then(|n| i64::try_from(n.clone()).ok()).ok_or(Error::Internal("no integer bound".into()))
    });
    ctx.exact("ceiling", "integer lower bound N", 39, ceil);
    ctx.exact("contains-k4", "the bound forces a 4-clique", true, b.map(|b| b.certifies_k4()));
}

pub(super) fn edge_count(ctx: &mut Ctx) {
    let p = p76();
    let em = edge_matrix_around_edge::<Rational>(&p);
    let at0 = em.at(&Rational::zero());
    let rows: Vec<Value> = (0..4).map(|i| Value::list((i..4).map(|j| at0[(i, j)].clone()))).collect();
    let expected = Value::list([ints(&[0, 56, 56, 112]), ints(&[56, 217, 224]), ints(&[56, 224]), ints(&[80])]);
    let expected = match expected {
        Value::List(rows) => Value::List(rows.into_iter().map(|row| match row {
            Value::List(xs) => Value::list(xs.into_iter().map(|x| match x {
                Value::Int(n) => Value::Rat(int(n)),
                other => other,
            })),
            other => other,
        }).collect()),
        other => other,
    };
    ctx.exact("matrix-a0", "upper triangle of the edge matrix at a = 0", expected, Ok(Value::List(rows)));
    ctx.exact("total", "edges avoiding x and y, independent of a", pw(&[(1081, 1)]), Ok(Value::poly(em.total(), "w")));
    ctx.exact("total-closed-form", "v·k/2 − (2k − 1)", 1081, Ok(76 * 30 / 2 - (2 * 30 - 1)));
    let row = (1..4).fold(UniPoly::zero(), |s, j| s + em.entries[(0, j)].clone());
    ctx.exact("row-1", "edges leaving N(x)∩N(y): λ(k−2) − 2a", Value::poly(UniPoly::new(vec![int(224), int(-2)]), "a"), Ok(Value::poly(row, "a")));
}

fn freq(m: usize, d: &[u64], zero: &[usize]) -> Result<Value> {
    let prof = FrequencyProfile::new(m, d, zero.iter().copied())?;
    Ok(Value::list(frequency_solutions(&p76(), &prof).into_iter().map(|b| Value::list(b.into_iter().map(|x| x as i64)))))
}

fn bs(sols: &[&[i64]]) -> Value {
    Value::list(sols.iter().map(|s| ints(s)))
}

pub(super) fn freq_cases(ctx: &mut Ctx) {
    ctx.exact("i", "m = 4, K4", bs(&[&[0, 36, 36, 0, 0]]), freq(4, &[0, 0, 0, 4], &[4]));
    ctx.exact("ii", "m = 6, 4-regular", bs(&[&[0, 0, 54, 16, 0, 0, 0]]), freq(6, &[0, 0, 0, 0, 6], &[0, 4, 5, 6]));
    ctx.exact("iii", "m = 7, degrees 4^6 6^1", bs(&[&[0, 0, 27, 42, 0, 0, 0, 0]]), freq(7, &[0, 0, 0, 0, 6, 0, 1], &[0, 5, 6, 7]));
    ctx.exact(
        "iv",
        "m = 7, degrees 4^5 5^2: two solutions",
        bs(&[&[0, 0, 28, 40, 1, 0, 0, 0], &[0, 1, 25, 43, 0, 0, 0, 0]]),
        freq(7, &[0, 0, 0, 0, 5, 2], &[0, 5, 6, 7]),
    );
    ctx.exact("v", "m = 8, degrees 4^3 5^4 6^1", bs(&[&[0, 0, 7, 56, 5, 0, 0, 0, 0]]), freq(8, &[0, 0, 0, 0, 3, 4, 1], &[0, 1, 5, 6, 7, 8]));
    ctx.exact("vi", "m = 8, degrees 4^2 5^6", bs(&[&[0, 0, 8, 54, 6, 0, 0, 0, 0]]), freq(8, &[0, 0, 0, 0, 2, 6], &[0, 1, 5, 6, 7, 8]));
}

pub(super) fn no_k5(ctx: &mut Ctx) {
    let k5 = spec(&[5], &[&[e(10)]]);
    let m = gram_at(&k5, &dots76(), 0);
    ctx.exact("gram", "Gram matrix of the K5 sum", r(-1, 3), Ok(m[(0, 0)].clone()));
    ctx.exact("negative", "the Gram matrix is not PSD", true, m.min_eigen_sign().map(|s| s == EigenSign::Negative));
}

pub(super) fn no_k5_minus_e(ctx: &mut Ctx) {
    // K5 − e is a K4 plus a vertex with 3 neighbours in it
    let sols = FrequencyProfile::new(4, &[0, 0, 0, 4], [4]).map(|prof| frequency_solutions(&p76(), &prof));
    let b3 = sols.map(|s| s.iter().map(|b| b[3]).max().unwrap_or(0));
    ctx.exact("b3", "vertices with 3 neighbours in a K4", 0, b3.map(|x| x as i64));
}

/// Row of the degree matrix for a vertex with `c` neighbours in the K4:
/// `3c + t1 + 2t2 = cλ + (4 − c)µ` and `t1 + t2 = k − c`.
fn degree_row(p: &SrgParams, c: i64) -> Result<Vec<Rational>> {
    let (k, l, mu) = (p.k() as i64, p.lambda() as i64, p.mu() as i64);
    let a = Matrix::from_rows(vec![vec![int(1), int(2)], vec![int(1), int(1)]]);
    let sol = a.solve(&[int(c * l + (4 - c) * mu - 3 * c), int(k - c)])?.ok_or(Error::Inconsistent)?;
    Ok(std::iter::once(int(c)).chain(sol.particular).collect())
}

pub(super) fn degmat_g012(ctx: &mut Ctx) {
    let p = p76();
    // G0 row from the frequency solution (0,36,36,0): 36/4 and 2·36/4
    let g0 = vec![int(3), int(36) / int(4), int(2 * 36) / int(4)];
    let rows: Result<Vec<Vec<Rational>>> = [1, 2].iter().map(|&c| degree_row(&p, c)).collect();
    let computed = rows.map(|rs| Value::list(std::iter::once(g0.clone()).chain(rs).map(Value::list)));
    let expected = Value::list([[3, 9, 18], [1, 11, 18], [2, 18, 10]].iter().map(|row| Value::list(row.iter().map(|&x| int(x)))));
    ctx.exact("rows", "degree matrix of {G0, G1, G2} (row = part of the source vertex)", expected, computed);
    let dm = DegreeMatrix(vec![vec![3, 9, 18], vec![1, 11, 18], vec![2, 18, 10]]);
    ctx.exact("consistent", "the matrix is realisable with part sizes (4, 36, 36)", true, Ok(dm.to_partition_spec(&[4, 36, 36]).is_ok()));
    ctx.exact("g2-edges", "edges inside G2", 180, Ok(36 * 10 / 2));
}

fn case1_spec() -> PartitionSpec {
    spec(&[4, 18, 1], &[&[e(6), e(36), e(1)], &[ew(0, 1), e(18)], &[e(0)]])
}

pub(super) fn case1_avg_edges(ctx: &mut Ctx) {
    let d = dots76();
    ctx.exact("average", "average edges in H_x: 180·8/40", int(36), Ok(int(180 * 8) / int(40)));
    let s = case1_spec();
    ctx.exact("det", "det M for {G0, H_x, {x}}", pw(&[(722 * 36, 1125), (-722, 1125)]), Ok(det_value(&s, &d)));
    let top = psd_w_range_strict(&s, &d, 0, 153).last().copied();
    ctx.exact("max-w", "largest admissible w (at most C(18,2))", 36, top.ok_or(Error::Inconsistent));
    // x ∈ G0: {x} is then inside G0, so X1·X3 = 1 + 3p instead of p + 3q
    let inside = Ok((0..=153i64).all(|w| {
        let mut m = gram_at(&s, &d, w);
        let v = Rational::one() + int(3) * d.p.clone();
        m[(0, 2)] = v.clone();
        m[(2, 0)] = v;
        m == gram_at(&s, &d, w)
    }));
    ctx.exact("x-in-g0", "for x in G0 the Gram matrix is unchanged", true, inside);
}

pub(super) fn case1_kernel(ctx: &mut Ctx) {
    let d = dots76();
    let s = case1_spec();
    let k = kernel_at(&s, &d, 36);
    ctx.exact("kernel", "kernel at w = 36", rats(&[(1, 1), (1, 4), (1, 1)]), lambda_value(&k));
    ctx.exact("adjacent", "z in G1 adjacent to x: neighbours in H_x", int(6), solve_count(&k, &s.sizes, &d, None, &[Some(1), None, Some(1)]));
    ctx.exact("non-adjacent", "z in G1 not adjacent to x: neighbours in H_x", int(10), solve_count(&k, &s.sizes, &d, None, &[Some(1), None, Some(0)]));
    let g0 = Ok(Value::list([
        solve_count(&k, &s.sizes, &d, Some(0), &[Some(3), None, Some(1)]).map(Value::Rat).unwrap_or_else(|e| Value::Text(e.to_string())),
        solve_count(&k, &s.sizes, &d, Some(0), &[Some(3), None, Some(0)]).map(Value::Rat).unwrap_or_else(|e| Value::Text(e.to_string())),
    ]));
    ctx.exact("z-in-g0", "z in G0, adjacent and not adjacent to x", Value::list([int(6), int(10)]), g0);
    ctx.exact("lambda-tilde", "common neighbours in the complement of G2: 8 − 6", 2, Ok(8 - 6));
    ctx.exact("mu-tilde", "common neighbours in the complement of G2 for non-edges: 14 − 10", 4, Ok(14 - 10));
    ctx.exact("k-tilde", "degree inside G0 ∪ G1 from the degree matrix", ints(&[12, 12]), Ok(ints(&[3 + 9, 1 + 11])));
}

pub(super) fn case1_splits(ctx: &mut Ctx) {
    let p40 = SrgParams::new(40, 12, 2, 4).expect("valid parameters");
    let d40 = representation_dots(&p40, Side::DualInF);
    let dots = d40.as_ref().map(|d| Value::list([d.p.clone(), d.q.clone()])).map_err(Clone::clone);
    ctx.exact("dots", "(p, q) of SRG(40,12,2,4) from the eigenvalue 2", rats(&[(1, 6), (-1, 9)]), dots);
    let f = derive_spectrum(&p40).f;
    ctx.exact("dimension", "dimension of that representation (multiplicity of 2)", 24, surd_int(&f));
    ctx.exact("half", "|N(z) ∩ G̃| = 30 − 10", 20, Ok(30 - 10));
    ctx.exact("edges", "edges in N(z) ∩ G̃: 120 − 8·10", 40, Ok(30 * 8 / 2 - 8 * 10));
    let half = spec(&[20], &[&[e(40)]]);
    let xx = d40.map(|d| gram_at(&half, &d, 0)[(0, 0)].clone());
    ctx.exact("xx", "X·X = 20 + 80/6 − 300/9", Rational::zero(), xx);
    let d40 = representation_dots(&p40, Side::DualInF);
    // X·x_i = 1 + d·p + (19 − d)·q = 0
    let deg = d40.map(|d| (Rational::one() + int(19) * d.q.clone()) / (d.q.clone() - d.p.clone()));
    ctx.exact("regular", "degree inside N(z) ∩ G̃", int(4), deg);
    ctx.exact("complement-edges", "edges in N'(z) ∩ G̃: 40·12/2 − 40 − 20·8", 40, Ok(40 * 12 / 2 - 40 - 20 * 8));
    ctx.note("common", "adjacent z1, z2 in triangle-free G2 have all 8 common neighbours in G̃");
}

pub(super) fn sub3111(ctx: &mut Ctx) {
    let d = dots76();
    ctx.note("exclusions", "subcases (3,3,0,0) and (3,2,1,0) contain K5 or K5 − e; b5 = 0 likewise");
    let g56 = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(2)]]).solve(&[int(24), int(30)]);
    let g56 = g56.and_then(|s| s.ok_or(Error::Inconsistent)).map(|s| Value::list(s.particular));
    ctx.exact("g5-g6", "(|G5|, |G6|) from |G5| + |G6| = 24, |G5| + 2|G6| = 30", Value::list([int(18), int(6)]), g56);
    let s = spec(&[6, 6, 1], &[&[ew(0, 1), e(12), e(6)], &[e(9), e(6)], &[e(0)]]);
    ctx.exact("det", "det M for {G6, H∖{y}, {y}}", pw(&[(0, 1), (-1444, 3375)]), Ok(det_value(&s, &d)));
    ctx.exact("w", "admissible edge counts in G6", ints(&[0]), Ok(feasible(&s, &d, 0, 15)));
    let k = kernel_at(&s, &d, 0);
    ctx.exact("kernel", "kernel at w = 0", rats(&[(1, 1), (4, 1), (8, 1)]), lambda_value(&k));
    ctx.exact("g7", "|G7| = b2 − |G5|", 9, Ok(27 - 18));
    ctx.exact("lincomb", "z in G7 with e2 = 2, e3 = 0: neighbours in G6", int(6), solve_count(&k, &s.sizes, &d, None, &[None, Some(2), Some(0)]));
    let s2 = spec(&[10, 6], &[&[ew(0, 1), e(60)], &[e(0)]]);
    ctx.exact("det-coclique", "det M for {G7 ∪ {y}, G6}", pw(&[(0, 1), (-1216, 135)]), Ok(det_value(&s2, &d)));
    ctx.exact("w-coclique", "admissible edge counts in G7 ∪ {y}", ints(&[0]), Ok(feasible(&s2, &d, 0, 45)));
}

fn one_vertex_spec(m: u64, edges: i64) -> PartitionSpec {
    spec(&[m, 1], &[&[e(edges), ew(0, 1)], &[e(0)]])
}

pub(super) fn sub2220(ctx: &mut Ctx) {
    let d = dots76();
    let s = one_vertex_spec(6, 12);
    ctx.exact("det", "det M for {H, {x}}, H 4-regular on 6 vertices", pw(&[(-42 * 42 + 1080, 2025), (2 * 19 * 42, 2025), (-361, 2025)]), Ok(det_value(&s, &d)));
    ctx.exact("w", "admissible neighbour counts of x in H", ints(&[1, 2, 3]), Ok(feasible(&s, &d, 0, 6)));
    let s2 = spec(&[16, 6], &[&[ew(0, 1), e(48)], &[e(12)]]);
    ctx.exact("det-g9", "det M for {G9, H}", pw(&[(0, 1), (-304, 675)]), Ok(det_value(&s2, &d)));
    ctx.exact("w-g9", "admissible edge counts in G9", ints(&[0]), Ok(feasible(&s2, &d, 0, 120)));
}

pub(super) fn sub2211_freq(ctx: &mut Ctx) {
    let d = dots76();
    let s = one_vertex_spec(7, 15);
    // centre 49/19: M12 = (49 − 19w)/45 with M11 = 7 + 30p + 12q = 13/15
    ctx.exact("det", "det M for {H, {x}}, H = G0 ∪ G3", pw(&[(-49 * 49 + 1755, 2025), (2 * 19 * 49, 2025), (-361, 2025)]), Ok(det_value(&s, &d)));
    ctx.exact("w", "admissible neighbour counts of x in H", ints(&[1, 2, 3, 4]), Ok(feasible(&s, &d, 0, 7)));
}

pub(super) fn sub2211_situation_22(ctx: &mut Ctx) {
    ctx.note("repeat", "situation (2,2): the subcase (2,2,2,0) argument applies to G13 ∪ {y} ∪ G3");
}

pub(super) fn sub2211_situation_21(ctx: &mut Ctx) {
    let d = dots76();
    let s = one_vertex_spec(8, 19);
    ctx.exact("det", "det M for {H, {x}}, H = G0 ∪ G3 ∪ {y}", pw(&[(-56 * 56 + 1350, 2025), (2 * 19 * 56, 2025), (-361, 2025)]), Ok(det_value(&s, &d)));
    ctx.exact("w", "admissible neighbour counts of x in H", ints(&[2, 3, 4]), Ok(feasible(&s, &d, 0, 8)));
    let s14 = spec(&[5, 8], &[&[ew(0, 1), e(20)], &[e(19)]]);
    ctx.exact("det-g14", "det M for {G14, H}", pw(&[(38, 81), (-76, 135)]), Ok(det_value(&s14, &d)));
    ctx.exact("w-g14", "admissible edge counts in G14", ints(&[0]), Ok(feasible(&s14, &d, 0, 10)));
    let s3 = spec(&[1, 5, 7], &[&[e(0), ew(0, 1), e(6)], &[e(0), ew(20, -1)], &[e(13)]]);
    ctx.exact("det-y1", "det M for {{y1}, G14, H∖{y1}}", pw(&[(0, 1), (-1444, 3645), (-722, 6075)]), Ok(det_value(&s3, &d)));
    ctx.exact("w-y1", "admissible edge counts between y1 and G14", ints(&[0]), Ok(feasible(&s3, &d, 0, 5)));
    let k = kernel_at(&s3, &d, 0);
    ctx.exact("kernel", "kernel at w = 0", rats(&[(1, 1), (1, 5), (4, 5)]), lambda_value(&k));
    ctx.exact("kernel-scaled", "kernel is proportional to (5, 1, 4)", true, k.as_ref().map(|k| k.proportional_to(&[int(5), int(1), int(4)])).map_err(Clone::clone));
    let pair = |a: Option<i64>, b: Option<i64>, member: Option<usize>, sizes: &[u64], kk: &Result<KernelCertificate>, xs: &dyn Fn(Option<i64>, Option<i64>) -> Vec<Option<i64>>| {
        solve_count(kk, sizes, &d, member, &xs(a, b))
    };
    let outside = |a: Option<i64>, b: Option<i64>| vec![a, None, b];
    ctx.exact("g15-a", "z in G15 with (e1, e3) = (0, 2): e2 = 6 > 5, impossible", int(6), pair(Some(0), Some(2), None, &s3.sizes, &k, &outside));
    ctx.exact("g15-b", "z in G15 with (e1, e3) = (1, 1)", int(5), pair(Some(1), Some(1), None, &s3.sizes, &k, &outside));
    let refined: Result<KernelCertificate> = Ok(KernelCertificate { lambda: vec![int(5), int(1), int(4), int(4)] });
    let sizes = [1, 5, 3, 4];
    let inside = |a: Option<i64>, b: Option<i64>| vec![a, None, Some(0), b];
    ctx.exact("g16-a", "z in G16 with (e1, e4) = (0, 4): e2 = 6, impossible", int(6), pair(Some(0), Some(4), Some(2), &sizes, &refined, &inside));
    ctx.exact("g16-b", "z in G16 with (e1, e4) = (1, 3)", int(5), pair(Some(1), Some(3), Some(2), &sizes, &refined, &inside));
    ctx.exact("k610", "1 + |G14| + |G15| + |G16| = 16", 16, Ok(1 + 5 + 7 + 3));
}

pub(super) fn sub2211_situation_11(ctx: &mut Ctx) {
    let d = dots76();
    let s = spec(&[6, 8], &[&[ew(0, 1), e(24)], &[e(19)]]);
    ctx.exact("det-g17", "det M for {G17, H}", pw(&[(0, 1), (-76, 135)]), Ok(det_value(&s, &d)));
    ctx.exact("w-g17", "admissible edge counts in G17", ints(&[0]), Ok(feasible(&s, &d, 0, 15)));
    let k = kernel_at(&s, &d, 0);
    ctx.exact("kernel", "kernel at w = 0", rats(&[(1, 1), (4, 1)]), lambda_value(&k));
    ctx.exact("g18", "z in G18 with e2 = 2: neighbours in G17", int(6), solve_count(&k, &s.sizes, &d, None, &[None, Some(2)]));
    let refined: Result<KernelCertificate> = Ok(KernelCertificate { lambda: vec![int(1), int(4), int(4)] });
    ctx.exact("g19", "z in G19 with e2 = 4, e3 = 0: neighbours in G17", int(6), solve_count(&refined, &[6, 6, 2], &d, Some(2), &[None, Some(4), Some(0)]));
    ctx.exact("k610", "|G17| + |G18| + |G19| = 16", 16, Ok(6 + 8 + 2));
}

pub(super) fn sub2211_y_in_g1(ctx: &mut Ctx) {
    ctx.exact("edges", "edges of H with degrees 4^2 5^6", 19, Ok((2 * 4 + 6 * 5) / 2));
    ctx.note("repeat", "y in G1: H = G0 ∪ G3 ∪ {y} has the profile of situation (1,1) and the same argument applies");
}

pub(super) fn sub2211_branch_01(ctx: &mut Ctx) {
    let d = dots76();
    ctx.exact("g20", "|G20| = 3·8", 24, Ok(3 * 8));
    ctx.exact("g21", "vertices of G20 not adjacent to y: at least 24 − 18", 6, Ok(24 - 18));
    let s = spec(&[6, 3, 4, 1], &[&[ew(0, 1), e(6), e(12), e(0)], &[e(3), e(6), e(0)], &[e(6), e(1)], &[e(0)]]);
    ctx.exact("det-g21", "det M for {G21, G3, G0, {y}}", pw(&[(0, 1), (-13718, 50625)]), Ok(det_value(&s, &d)));
    ctx.exact("w-g21", "admissible edge counts in G21", ints(&[0]), Ok(feasible(&s, &d, 0, 15)));
    let k = kernel_at(&s, &d, 0);
    ctx.exact("kernel", "kernel at w = 0", rats(&[(1, 1), (4, 1), (6, 1), (-4, 1)]), lambda_value(&k));
    ctx.exact("g1-count", "vertices of G1 with 3 neighbours in H: 43 − 24", 19, Ok(43 - 24));
    ctx.exact("g22", "of those, not adjacent to y: at least 19 − 11", 8, Ok(19 - 11));
    ctx.exact("g22-lincomb", "z in G22 with (e2, e3, e4) = (2, 1, 0): neighbours in G21", Rational::zero(), solve_count(&k, &s.sizes, &d, None, &[None, Some(2), Some(1), Some(0)]));
    let refined: Result<KernelCertificate> = Ok(KernelCertificate { lambda: vec![int(1), int(4), int(6), int(6), int(-4)] });
    ctx.exact(
        "g23-lincomb",
        "z in G23 with (e2, e3, e5) = (2, 3, 0): neighbours in G21",
        Rational::zero(),
        solve_count(&refined, &[6, 3, 3, 1, 1], &d, Some(3), &[None, Some(2), Some(3), Some(0), Some(0)]),
    );
    let s22 = spec(&[8, 3, 4, 1], &[&[ew(0, 1), e(16), e(8), e(0)], &[e(3), e(6), e(0)], &[e(6), e(1)], &[e(0)]]);
    ctx.exact("det-g22", "det M for {G22, G3, G0, {y}}", pw(&[(109744, 455625), (-13718, 50625)]), Ok(det_value(&s22, &d)));
    ctx.exact("w-g22", "admissible edge counts in G22", ints(&[0]), Ok(feasible(&s22, &d, 0, 28)));
    let s5 = spec(
        &[1, 8, 3, 3, 1],
        &[&[e(0), ew(0, 1), e(2), e(3), e(0)], &[e(0), e(16), ew(8, -1), e(0)], &[e(3), e(4), e(0)], &[e(3), e(1)], &[e(0)]],
    );
    ctx.exact("det-g23", "det M for {G23, G22, G3, G0∖G23, {y}}", pw(&[(0, 1), (-4170272, 20503125), (-130321, 2278125)]), Ok(det_value(&s5, &d)));
    ctx.exact("w-g23", "admissible edge counts between G23 and G22", ints(&[0]), Ok(feasible(&s5, &d, 0, 8)));
    ctx.exact("coclique", "1 + |G21| + |G22| + |G23| = 16", 16, Ok(1 + 6 + 8 + 1));
}
