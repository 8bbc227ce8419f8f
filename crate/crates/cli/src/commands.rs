//! Subcommand implementations. Each returns the report to emit.

use serde_json::Value;

use formalode_core::{
    convolve_lt_ps, fundamental_solution, hurwitz_lt_lt, integrality_report, invert_symbol,
    padic_plan, solve_laurent, solve_padic, solve_polynomial, CoeffRing, DiffOperator,
    Error as CoreError, LaurentTail, PadicRing, PowerSeries, RationalField, RingDescriptor,
    SolveRegime,
};

use crate::args::{
    CoeffsArgs, Command, ConvolveArgs, FundamentalArgs, LaurentSolveArgs, RhsArgs, RingArgs,
    RingKind, SolveArgs, VerifyArgs,
};
use crate::error::{in_source, CliError, CliResult};
use crate::format::{AnyRing, Integrality, Report, SeriesFile, SeriesKind, Verification, Witness};

pub const MAX_ORDER_VAR: &str = "FORMALODE_MAX_ORDER";
pub const DEFAULT_MAX_ORDER: usize = 10_000;
const DEFAULT_ORDER: usize = 10;

pub fn run(command: &Command) -> CliResult<Report> {
    match command {
        Command::Coeffs(a) => cmd_coeffs(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Fundamental(a) => cmd_fundamental(a),
        Command::Convolve(a) => cmd_convolve(a),
        Command::LaurentSolve(a) => cmd_laurent_solve(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

/// The `--output` path of any subcommand.
pub fn output_path(command: &Command) -> Option<&str> {
    let out = match command {
        Command::Coeffs(a) => &a.output,
        Command::Solve(a) => &a.output,
        Command::Fundamental(a) => &a.output,
        Command::Convolve(a) => &a.output,
        Command::LaurentSolve(a) => &a.output,
        Command::Verify(a) => &a.output,
    };
    out.output.as_deref()
}

fn max_order() -> CliResult<usize> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{MAX_ORDER_VAR}: expected a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_ORDER),
    }
}

fn check_cap(requested: usize) -> CliResult<usize> {
    let cap = max_order()?;
    if requested > cap {
        return Err(CliError::LimitExceeded { requested, cap });
    }
    Ok(requested)
}

fn ring_from_args(args: &RingArgs) -> CliResult<AnyRing> {
    match args.ring {
        RingKind::Rational => {
            if args.prime.is_some() || args.precision.is_some() {
                return Err(CliError::Usage(
                    "--prime and --precision only apply to --ring padic".into(),
                ));
            }
            Ok(AnyRing::Rational(RationalField))
        }
        RingKind::Padic => {
            let (Some(p), Some(m)) = (args.prime, args.precision) else {
                return Err(CliError::Usage(
                    "--ring padic needs both --prime and --precision".into(),
                ));
            };
            Ok(AnyRing::Padic(PadicRing::new(p, m)?))
        }
    }
}

fn parse_op<R: CoeffRing>(ring: R, spec: &str) -> CliResult<DiffOperator<R>> {
    DiffOperator::parse(ring, spec).map_err(|e| in_source("--op", e))
}

fn parse_list<R: CoeffRing>(ring: &R, text: &str, source: &str) -> CliResult<Vec<R::Elem>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        let elem = ring.parse(part).map_err(|e| match e {
            CoreError::Parse { column, reason, .. } => in_source(
                source,
                CoreError::Parse {
                    input: text.to_string(),
                    column: column + offset,
                    reason,
                },
            ),
            other => CliError::Core(other),
        })?;
        out.push(elem);
        offset += part.chars().count() + 1;
    }
    Ok(out)
}

fn ring_mismatch(expected: RingDescriptor, found: RingDescriptor) -> CliError {
    CliError::Core(CoreError::RingMismatch {
        left: expected.to_string(),
        right: found.to_string(),
    })
}

fn check_file_ring<R: CoeffRing>(ring: &R, file: &SeriesFile) -> CliResult<()> {
    let file_ring = AnyRing::from_json(file.ring)?;
    let found = match &file_ring {
        AnyRing::Rational(r) => r.descriptor(),
        AnyRing::Padic(r) => r.descriptor(),
    };
    if found != ring.descriptor() {
        return Err(ring_mismatch(ring.descriptor(), found));
    }
    Ok(())
}

/// An infinite right-hand side given by a rule for `f_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    Ones,
    Geometric(String),
    Constant(String),
}

impl Generator {
    /// `ones`, `geometric(r)` / `geometric:r`, `constant(c)` / `constant:c`.
    pub fn parse(text: &str) -> CliResult<Self> {
        let t = text.trim();
        if t == "ones" {
            return Ok(Generator::Ones);
        }
        let arg = |name: &str| -> Option<String> {
            let rest = t.strip_prefix(name)?;
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| rest.strip_prefix(':'))?;
            Some(inner.trim().to_string())
        };
        if let Some(r) = arg("geometric") {
            return Ok(Generator::Geometric(r));
        }
        if let Some(c) = arg("constant") {
            return Ok(Generator::Constant(c));
        }
        Err(CliError::Usage(format!(
            "--generator:1:1: unknown generator {text:?}; expected ones, geometric(r) or constant(c)"
        )))
    }

    /// `f_0..f_order` as a truncated series.
    pub fn materialize<R: CoeffRing>(&self, ring: &R, order: usize) -> CliResult<PowerSeries<R>> {
        let coeffs = match self {
            Generator::Ones => vec![ring.one(); order + 1],
            Generator::Constant(c) => {
                let c = ring.parse(c).map_err(|e| in_source("--generator", e))?;
                vec![c; order + 1]
            }
            Generator::Geometric(r) => {
                let r = ring.parse(r).map_err(|e| in_source("--generator", e))?;
                let mut acc = ring.one();
                let mut out = Vec::with_capacity(order + 1);
                for _ in 0..=order {
                    out.push(acc.clone());
                    acc = ring.mul(&acc, &r);
                }
                out
            }
        };
        Ok(PowerSeries::truncated(ring.clone(), coeffs))
    }
}

enum PowerRhs<R: CoeffRing> {
    Series(PowerSeries<R>),
    Generator(Generator),
}

impl<R: CoeffRing> PowerRhs<R> {
    fn read(ring: &R, args: &RhsArgs) -> CliResult<Self> {
        if let Some(text) = &args.rhs {
            let coeffs = parse_list(ring, text, "--rhs")?;
            return Ok(PowerRhs::Series(PowerSeries::polynomial(
                ring.clone(),
                coeffs,
            )));
        }
        if let Some(path) = &args.rhs_file {
            let file = SeriesFile::read(path)?;
            check_file_ring(ring, &file)?;
            return Ok(PowerRhs::Series(file.to_power(ring.clone(), path)?));
        }
        if let Some(g) = &args.generator {
            return Ok(PowerRhs::Generator(Generator::parse(g)?));
        }
        Err(CliError::Usage(
            "a right-hand side is required: --rhs, --rhs-file or --generator".into(),
        ))
    }

    /// The right-hand side known through at least `order`.
    fn series(&self, ring: &R, order: usize) -> CliResult<PowerSeries<R>> {
        match self {
            PowerRhs::Series(s) => Ok(s.clone()),
            PowerRhs::Generator(g) => g.materialize(ring, order),
        }
    }
}

fn read_laurent_rhs<R: CoeffRing>(
    ring: &R,
    args: &RhsArgs,
    depth: Option<usize>,
) -> CliResult<LaurentTail<R>> {
    if let Some(text) = &args.rhs {
        let coeffs = parse_list(ring, text, "--rhs")?;
        return Ok(LaurentTail::finite(ring.clone(), coeffs));
    }
    if let Some(path) = &args.rhs_file {
        let file = SeriesFile::read(path)?;
        check_file_ring(ring, &file)?;
        return file.to_laurent(ring.clone(), path);
    }
    if let Some(g) = &args.generator {
        let depth = depth.unwrap_or(DEFAULT_ORDER);
        if depth == 0 {
            return Ok(LaurentTail::truncated(ring.clone(), Vec::new()));
        }
        let s = Generator::parse(g)?.materialize(ring, depth - 1)?;
        return Ok(LaurentTail::truncated(ring.clone(), s.into_coeffs()));
    }
    Err(CliError::Usage(
        "a right-hand side is required: --rhs, --rhs-file or --generator".into(),
    ))
}

fn strings<T: ToString>(items: &[T]) -> Value {
    Value::from(items.iter().map(ToString::to_string).collect::<Vec<_>>())
}

fn finish_verification(mut report: Report, verification: Verification) -> CliResult<Report> {
    let ok = verification.verified;
    report.verification = Some(verification);
    if ok {
        Ok(report)
    } else {
        Err(CliError::VerificationFailed(Box::new(report)))
    }
}

fn check_power_solution<R: CoeffRing>(
    op: &DiffOperator<R>,
    w: &PowerSeries<R>,
    f: &PowerSeries<R>,
) -> CliResult<Verification> {
    let lhs = op.apply(w)?;
    let (checked_order, exact) = if lhs.is_exact() && f.is_exact() {
        (lhs.trunc_order().max(f.trunc_order()), true)
    } else {
        let order =
            w.trunc_order()
                .checked_sub(op.order())
                .ok_or(CoreError::InsufficientOrder {
                    needed: op.order(),
                    available: w.trunc_order(),
                })?;
        (order, false)
    };
    Ok(Verification {
        verified: lhs.eq_mod(f, checked_order, None)?,
        checked_order,
        exact,
    })
}

fn check_laurent_solution<R: CoeffRing>(
    op: &DiffOperator<R>,
    w: &LaurentTail<R>,
    g: &LaurentTail<R>,
) -> CliResult<Verification> {
    let lhs = op.apply_laurent(w)?;
    let (checked_order, exact) = if lhs.is_exact() && g.is_exact() {
        (lhs.depth().max(g.depth()), true)
    } else {
        (w.depth().saturating_sub(op.order()), false)
    };
    Ok(Verification {
        verified: lhs.eq_mod(g, checked_order, None)?,
        checked_order,
        exact,
    })
}

fn cmd_coeffs(args: &CoeffsArgs) -> CliResult<Report> {
    fn go<R: CoeffRing>(ring: R, args: &CoeffsArgs) -> CliResult<Report> {
        let order = check_cap(args.order)?;
        let op = parse_op(ring.clone(), &args.op)?;
        let c = invert_symbol(&op, order)?;
        Ok(Report::new(
            "coeffs",
            ring.descriptor().into(),
            strings(c.coeffs()),
        ))
    }
    match ring_from_args(&args.ring)? {
        AnyRing::Rational(r) => go(r, args),
        AnyRing::Padic(r) => go(r, args),
    }
}

fn cmd_solve(args: &SolveArgs) -> CliResult<Report> {
    match ring_from_args(&args.ring)? {
        AnyRing::Rational(ring) => solve_rational(ring, args),
        AnyRing::Padic(ring) => solve_over_zp(ring, args),
    }
}

fn solve_rational(ring: RationalField, args: &SolveArgs) -> CliResult<Report> {
    let op = parse_op(ring, &args.op)?;
    if let Some(order) = args.order {
        check_cap(order)?;
    }
    let f = match PowerRhs::read(&ring, &args.rhs)? {
        PowerRhs::Series(f) => f,
        PowerRhs::Generator(_) => return Err(CoreError::NotPolynomial.into()),
    };
    check_cap(f.trunc_order())?;
    let w = solve_polynomial(&op, &f)?;
    let mut report = Report::for_series("solve", SeriesFile::from_power(&w));
    report.regime = Some(SolveRegime::ExactPolynomial.name().to_string());
    let integrality = integrality_report(&w);
    report.integrality = Some(Integrality {
        integral: integrality.integral,
        witness: integrality.witness.map(|(index, value)| Witness {
            index,
            value: value.to_string(),
        }),
    });
    if !args.verify {
        return Ok(report);
    }
    let verification = check_power_solution(&op, &w, &f)?;
    finish_verification(report, verification)
}

fn solve_over_zp(ring: PadicRing, args: &SolveArgs) -> CliResult<Report> {
    let op = parse_op(ring.clone(), &args.op)?;
    let plan = padic_plan(&op)?;
    let order = check_cap(args.order.unwrap_or(DEFAULT_ORDER))?;
    let needed = check_cap(order + plan.tail_cutoff.max(1) - 1)?;
    let f = PowerRhs::read(&ring, &args.rhs)?.series(&ring, needed)?;
    let w = solve_padic(&op, &f, order)?;
    let mut report = Report::for_series("solve", SeriesFile::from_power(&w));
    report.regime = Some(plan.regime.name().to_string());
    report.tail_cutoff = Some(plan.tail_cutoff);
    if !args.verify {
        return Ok(report);
    }
    let verification = check_power_solution(&op, &w, &f)?;
    finish_verification(report, verification)
}

fn cmd_fundamental(args: &FundamentalArgs) -> CliResult<Report> {
    fn go<R: CoeffRing>(
        op: DiffOperator<R>,
        depth: usize,
        cutoff: Option<(SolveRegime, usize)>,
        verify: bool,
    ) -> CliResult<Report> {
        let depth = check_cap(depth)?;
        let e = fundamental_solution(&op, depth)?;
        let mut report = Report::for_series("fundamental", SeriesFile::from_laurent(&e));
        if let Some((regime, n)) = cutoff {
            report.regime = Some(regime.name().to_string());
            report.tail_cutoff = Some(n);
        }
        if !verify {
            return Ok(report);
        }
        let unit = LaurentTail::reciprocal_x(op.ring().clone());
        let verification = check_laurent_solution(&op, &e, &unit)?;
        finish_verification(report, verification)
    }
    match ring_from_args(&args.ring)? {
        AnyRing::Rational(ring) => {
            let op = parse_op(ring, &args.op)?;
            go(op, args.depth.unwrap_or(DEFAULT_ORDER), None, args.verify)
        }
        AnyRing::Padic(ring) => {
            let op = parse_op(ring, &args.op)?;
            let plan = padic_plan(&op)?;
            let depth = args.depth.unwrap_or(plan.tail_cutoff);
            go(
                op,
                depth,
                Some((plan.regime, plan.tail_cutoff)),
                args.verify,
            )
        }
    }
}

fn cmd_convolve(args: &ConvolveArgs) -> CliResult<Report> {
    let b_file = SeriesFile::read(&args.b_file)?;
    let f_file = SeriesFile::read(&args.f_file)?;
    if b_file.kind != SeriesKind::Laurent {
        return Err(CliError::Usage(format!(
            "{}: the left factor must be a Laurent series",
            args.b_file
        )));
    }
    if b_file.ring != f_file.ring {
        let b = AnyRing::from_json(b_file.ring)?;
        let f = AnyRing::from_json(f_file.ring)?;
        return Err(ring_mismatch(any_descriptor(&b), any_descriptor(&f)));
    }
    match AnyRing::from_json(b_file.ring)? {
        AnyRing::Rational(r) => convolve_in(r, args, &b_file, &f_file),
        AnyRing::Padic(r) => convolve_in(r, args, &b_file, &f_file),
    }
}

fn any_descriptor(ring: &AnyRing) -> RingDescriptor {
    match ring {
        AnyRing::Rational(r) => r.descriptor(),
        AnyRing::Padic(r) => r.descriptor(),
    }
}

fn convolve_in<R: CoeffRing>(
    ring: R,
    args: &ConvolveArgs,
    b_file: &SeriesFile,
    f_file: &SeriesFile,
) -> CliResult<Report> {
    let b = b_file.to_laurent(ring.clone(), &args.b_file)?;
    match f_file.kind {
        SeriesKind::Power => {
            let f = f_file.to_power(ring, &args.f_file)?;
            let order = match args.order {
                Some(n) => n,
                None if f.is_exact() => f.trunc_order(),
                None => {
                    let terms = b.support_depth().unwrap_or(b.depth()).max(1);
                    f.trunc_order()
                        .checked_sub(terms - 1)
                        .ok_or(CoreError::InsufficientOrder {
                            needed: terms - 1,
                            available: f.trunc_order(),
                        })?
                }
            };
            let out = convolve_lt_ps(&b, &f, check_cap(order)?)?;
            Ok(Report::for_series("convolve", SeriesFile::from_power(&out)))
        }
        SeriesKind::Laurent => {
            let g = f_file.to_laurent(ring, &args.f_file)?;
            let mut out = hurwitz_lt_lt(&b, &g)?;
            if let Some(depth) = args.depth {
                if depth < out.depth() || !out.is_exact() {
                    out = out.truncate(check_cap(depth)?)?;
                }
            }
            Ok(Report::for_series(
                "convolve",
                SeriesFile::from_laurent(&out),
            ))
        }
    }
}

fn cmd_laurent_solve(args: &LaurentSolveArgs) -> CliResult<Report> {
    fn go<R: CoeffRing>(ring: R, args: &LaurentSolveArgs) -> CliResult<Report> {
        let op = parse_op(ring.clone(), &args.op)?;
        if let Some(d) = args.depth {
            check_cap(d)?;
        }
        let g = read_laurent_rhs(&ring, &args.rhs, args.depth)?;
        let depth = match args.depth {
            Some(d) => d,
            None if g.is_exact() => DEFAULT_ORDER.max(g.depth()),
            None => g.depth(),
        };
        let w = solve_laurent(&op, &g, check_cap(depth)?)?;
        let report = Report::for_series("laurent-solve", SeriesFile::from_laurent(&w));
        if !args.verify {
            return Ok(report);
        }
        let verification = check_laurent_solution(&op, &w, &g)?;
        finish_verification(report, verification)
    }
    match ring_from_args(&args.ring)? {
        AnyRing::Rational(r) => go(r, args),
        AnyRing::Padic(r) => go(r, args),
    }
}

fn cmd_verify(args: &VerifyArgs) -> CliResult<Report> {
    fn go<R: CoeffRing>(ring: R, args: &VerifyArgs) -> CliResult<Report> {
        let op = parse_op(ring.clone(), &args.op)?;
        let file = SeriesFile::read(&args.solution)?;
        check_file_ring(&ring, &file)?;
        let (report, verification) = match file.kind {
            SeriesKind::Power => {
                let w = file.to_power(ring.clone(), &args.solution)?;
                check_cap(w.trunc_order())?;
                let f = PowerRhs::read(&ring, &args.rhs)?.series(&ring, w.trunc_order())?;
                let v = check_power_solution(&op, &w, &f)?;
                (Report::for_series("verify", file), v)
            }
            SeriesKind::Laurent => {
                let w = file.to_laurent(ring.clone(), &args.solution)?;
                let g = read_laurent_rhs(&ring, &args.rhs, Some(check_cap(w.depth())?))?;
                let v = check_laurent_solution(&op, &w, &g)?;
                (Report::for_series("verify", file), v)
            }
        };
        finish_verification(report, verification)
    }
    match ring_from_args(&args.ring)? {
        AnyRing::Rational(r) => go(r, args),
        AnyRing::Padic(r) => go(r, args),
    }
}
