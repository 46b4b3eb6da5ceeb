mod args;
mod report;
mod text;

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use thiserror::Error;

use assrkit_core::classify::{classify, ClassifyError, ClassifyOptions};
use assrkit_core::combined::combined_with;
use assrkit_core::exact::{MatrixError, RMatrix};
use assrkit_core::gen::{
    fixture, fixture_matrix, random_signed_monomial, sample_assr_with, scale_perturb, FixtureId, GenError,
    SampleConfig,
};
use assrkit_core::matrix_file::{self, MatrixFileError, MatrixFormat};
use assrkit_core::theorems::{run_batch, CheckConfig, TheoremError};
use assrkit_core::Execution;

use args::{Cli, Command, FileFormat, GenArgs, GenKind, GlobalArgs, MatrixSource, VerifyArgs};
use report::{CombinedReport, Generation, InputReport, Report, RunConfig};

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{label}: {source}")]
    Parse { label: String, source: MatrixFileError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("{label}: {source}")]
    Cap { label: String, source: ClassifyError },
    #[error("{label}: matrix is singular, combined matrix undefined")]
    Singular { label: String },
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Gen(_) => 2,
            CliError::Cap { .. } => 3,
            CliError::Singular { .. } => 4,
        }
    }
}

const EXIT_CHECK_FAILED: u8 = 5;

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io { path: path.display().to_string(), source }
}

fn exec(global: &GlobalArgs) -> Execution {
    if global.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn run_config(global: &GlobalArgs) -> RunConfig {
    RunConfig { max_order: global.max_order, digits: global.digits, seed: None, trials: None, lemma_trials: None }
}

fn classify_err(label: &str, e: ClassifyError) -> CliError {
    match e {
        ClassifyError::OrderCap { .. } => CliError::Cap { label: label.into(), source: e },
        other => CliError::Usage(format!("{label}: {other}")),
    }
}

fn read_matrix(path: &Path) -> Result<(String, RMatrix), CliError> {
    let label = path.display().to_string();
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err(path))?;
        s
    } else {
        fs::read_to_string(path).map_err(io_err(path))?
    };
    let a = matrix_file::parse(&text).map_err(|source| CliError::Parse { label: label.clone(), source })?;
    Ok((label, a))
}

fn load(source: &MatrixSource) -> Result<(String, RMatrix), CliError> {
    match (&source.path, source.fixture) {
        (_, Some(id)) => Ok((id.to_string(), fixture_matrix(id))),
        (Some(path), None) => read_matrix(path),
        (None, None) => Err(CliError::Usage("no matrix given".into())),
    }
}

fn cmd_classify(global: &GlobalArgs, source: &MatrixSource) -> Result<Report, CliError> {
    let (label, a) = load(source)?;
    let opts = ClassifyOptions { max_order: global.max_order, exec: exec(global) };
    let c = classify(&a, &opts).map_err(|e| classify_err(&label, e))?;
    let mut input = InputReport::new(label, &a);
    input.classification = Some(c);
    Ok(Report::new("classify", run_config(global), vec![input]))
}

fn cmd_combined(global: &GlobalArgs, source: &MatrixSource) -> Result<Report, CliError> {
    let (label, a) = load(source)?;
    let r = combined_with(&a, exec(global)).map_err(|e| match e {
        MatrixError::Singular => CliError::Singular { label: label.clone() },
        other => CliError::Usage(format!("{label}: {other}")),
    })?;
    let mut input = InputReport::new(label, &a);
    input.combined = Some(CombinedReport::new(&r.c, &r.det, global.digits));
    Ok(Report::new("combined", run_config(global), vec![input]))
}

fn cmd_verify(global: &GlobalArgs, v: &VerifyArgs) -> Result<Report, CliError> {
    let mut inputs: Vec<(String, RMatrix)> = Vec::new();
    if v.fixtures {
        inputs.extend(FixtureId::ALL.into_iter().map(|id| (id.to_string(), fixture_matrix(id))));
    }
    inputs.extend(v.fixture.iter().map(|&id| (id.to_string(), fixture_matrix(id))));
    for path in &v.paths {
        inputs.push(read_matrix(path)?);
    }
    let mut generation = None;
    if v.random {
        let cfg = SampleConfig { exec: exec(global), ..SampleConfig::default() };
        let out = sample_assr_with(v.order, v.trials, v.seed, &cfg)?;
        generation = Some(Generation {
            kind: "assr".into(),
            order: v.order,
            attempts: out.attempts,
            accepted: out.matrices.len(),
        });
        inputs.extend(out.matrices.into_iter().enumerate().map(|(i, a)| (format!("random-{i}"), a)));
    }
    if inputs.is_empty() && !v.random {
        return Err(CliError::Usage("verify needs matrix files, --fixture, --fixtures or --random".into()));
    }

    let config = CheckConfig { trials: v.lemma_trials, seed: v.seed, max_order: global.max_order, exec: exec(global) };
    let matrices: Vec<RMatrix> = inputs.iter().map(|(_, a)| a.clone()).collect();
    let results = run_batch(&matrices, &config);
    let mut reports = Vec::with_capacity(inputs.len());
    for ((label, a), result) in inputs.into_iter().zip(results) {
        let checks = result.map_err(|e| match e {
            TheoremError::Classify(c) => classify_err(&label, c),
            TheoremError::Matrix(m) => CliError::Usage(format!("{label}: {m}")),
        })?;
        let mut input = InputReport::new(label, &a);
        input.checks = Some(checks);
        reports.push(input);
    }
    let mut config = run_config(global);
    config.seed = Some(v.seed);
    config.lemma_trials = Some(v.lemma_trials);
    if v.random {
        config.trials = Some(v.trials);
    }
    let mut report = Report::new("verify", config, reports);
    report.summary.generation = generation;
    Ok(report)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(io_err(path))
}

fn cmd_fixtures(global: &GlobalArgs, out: &Path) -> Result<Report, CliError> {
    fs::create_dir_all(out).map_err(io_err(out))?;
    let mut inputs = Vec::new();
    for id in FixtureId::ALL {
        let f = fixture(id);
        let matrix_path = out.join(format!("{id}.txt"));
        write_file(&matrix_path, &matrix_file::to_plain(&f.matrix))?;
        let sidecar = serde_json::to_string_pretty(&f).expect("fixture serializes") + "\n";
        write_file(&out.join(format!("{id}.expected.json")), &sidecar)?;
        inputs.push(InputReport::new(matrix_path.display().to_string(), &f.matrix));
    }
    Ok(Report::new("fixtures", run_config(global), inputs))
}

fn cmd_gen(global: &GlobalArgs, g: &GenArgs) -> Result<Report, CliError> {
    let (kind, order, attempts, matrices) = match g.kind {
        GenKind::Assr => {
            let cfg = SampleConfig { exec: exec(global), ..SampleConfig::default() };
            let out = sample_assr_with(g.order, g.trials, g.seed, &cfg)?;
            ("assr", g.order, out.attempts, out.matrices)
        }
        GenKind::Scaled => {
            let base = fixture_matrix(g.fixture);
            let ms = (0..g.trials as u64).map(|t| scale_perturb(&base, g.seed.wrapping_add(t))).collect();
            ("scaled", base.order(), g.trials, ms)
        }
        GenKind::Monomial => {
            if g.order == 0 {
                return Err(CliError::Usage("order must be at least 1".into()));
            }
            let ms = (0..g.trials as u64).map(|t| random_signed_monomial(g.order, g.seed.wrapping_add(t))).collect();
            ("monomial", g.order, g.trials, ms)
        }
    };
    let (format, ext) = match g.format {
        FileFormat::Txt => (MatrixFormat::PlainText, "txt"),
        FileFormat::Json => (MatrixFormat::Json, "json"),
    };
    if let Some(dir) = &g.out {
        fs::create_dir_all(dir).map_err(io_err(dir))?;
    }
    let mut inputs = Vec::with_capacity(matrices.len());
    for (i, a) in matrices.iter().enumerate() {
        let name = format!("{kind}-{order}-{i:03}");
        let label = match &g.out {
            Some(dir) => {
                let path: PathBuf = dir.join(format!("{name}.{ext}"));
                write_file(&path, &matrix_file::serialize(a, format))?;
                path.display().to_string()
            }
            None => name,
        };
        inputs.push(InputReport::new(label, a));
    }
    let mut config = run_config(global);
    config.seed = Some(g.seed);
    config.trials = Some(g.trials);
    let mut report = Report::new("gen", config, inputs);
    report.summary.generation = Some(Generation { kind: kind.into(), order, attempts, accepted: matrices.len() });
    Ok(report)
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let g = &cli.global;
    match &cli.command {
        Command::Classify { source } => cmd_classify(g, source),
        Command::Combined { source } => cmd_combined(g, source),
        Command::Verify(v) => cmd_verify(g, v),
        Command::Fixtures { out } => cmd_fixtures(g, out),
        Command::Gen(args) => cmd_gen(g, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code());
        }
    };
    if cli.global.timing {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    let rendered = if cli.global.json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        text::report(&report)
    };
    let mut stdout = io::stdout().lock();
    if let Err(e) = stdout.write_all(rendered.as_bytes()).and_then(|_| stdout.flush()) {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    if report.summary.fails > 0 {
        ExitCode::from(EXIT_CHECK_FAILED)
    } else {
        ExitCode::SUCCESS
    }
}
