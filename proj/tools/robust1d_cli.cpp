// robust1d: exact truncated-quadratic robust means, edge-preserving image
// smoothing and the comparison experiments, from the command line.
//
// Exit codes: 0 ok, 2 unreadable/malformed input, 3 invalid arguments or
// samples, 4 oracle mismatch.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "robust1d/error.hpp"
#include "robust1d/estimator.hpp"
#include "robust1d/experiments.hpp"
#include "robust1d/format.hpp"
#include "robust1d/pgm.hpp"
#include "robust1d/sample_file.hpp"
#include "robust1d/samples.hpp"
#include "robust1d/smoothing.hpp"

namespace {

using namespace robust1d;

constexpr int kExitInput = 2;
constexpr int kExitInvalid = 3;
constexpr int kExitMismatch = 4;

int exit_code_for(ErrorKind kind) { return kind == ErrorKind::Parse ? kExitInput : kExitInvalid; }

// Holds either a file stream or a borrowed standard stream ("-").
class InputSource {
 public:
  explicit InputSource(const std::string& path) {
    if (path == "-") {
      in_ = &std::cin;
      return;
    }
    file_ = std::make_unique<std::ifstream>(path, std::ios::binary);
    if (!*file_) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    in_ = file_.get();
  }
  std::istream& stream() { return *in_; }

 private:
  std::unique_ptr<std::ifstream> file_;
  std::istream* in_ = nullptr;
};

class OutputSink {
 public:
  explicit OutputSink(const std::string& path) {
    if (path == "-") {
      out_ = &std::cout;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw Error(ErrorKind::Parse, "cannot open '" + path + "' for writing");
    out_ = file_.get();
  }
  std::ostream& stream() { return *out_; }
  void finish(const std::string& path) {
    out_->flush();
    if (!*out_) throw Error(ErrorKind::Parse, "write to '" + path + "' failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* out_ = nullptr;
};

struct MeanArgs {
  std::string input = "-";
  double cutoff = 0.0;
  bool weighted = false;
  bool oracle = false;
  std::size_t oracle_limit = kDefaultOracleLimit;
};

bool errors_agree(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b)); }

int run_mean(const MeanArgs& args) {
  const Cutoff cutoff(args.cutoff);
  InputSource src(args.input);
  SampleRows rows = parse_sample_rows(src.stream());
  if (args.weighted && !rows.weights && !rows.values.empty()) {
    throw Error(ErrorKind::Parse, "--weighted expects two columns (value weight)");
  }
  const SampleSet samples =
      args.weighted && rows.weights ? make_sample_set(rows.values, std::span<const double>(*rows.weights))
                                    : make_sample_set(rows.values);

  const RobustMeanResult r = exact_robust_mean(samples, cutoff);
  std::cout << "mean=" << format_number(r.mean) << " error=" << format_number(r.error) << " window=" << r.first
            << ',' << r.last << '\n';

  if (!args.oracle) return 0;
  const RobustMeanResult o = brute_force_robust_mean(samples, cutoff, args.oracle_limit);
  const bool agree = errors_agree(r.error, o.error);
  std::cout << "oracle=" << (agree ? "agree" : "mismatch") << " mean=" << format_number(o.mean)
            << " error=" << format_number(o.error) << " window=" << o.first << ',' << o.last << '\n';
  if (!agree) {
    std::cerr << "robust1d: oracle mismatch: sweep error " << format_number(r.error) << " vs brute force "
              << format_number(o.error) << '\n';
    return kExitMismatch;
  }
  return 0;
}

struct SmoothArgs {
  std::string input;
  std::string output;
  int radius = 2;
  double sigma = 1.5;
  double cutoff = 0.1;
  unsigned threads = 0;
};

int run_smooth(const SmoothArgs& args) {
  SmoothingConfig config{args.radius, args.sigma, Cutoff(args.cutoff)};
  config.validate();

  PgmImage in_img = [&] {
    InputSource src(args.input);
    return read_pgm(src.stream());
  }();
  const GrayImage smoothed = smooth_image(to_gray(in_img), config, args.threads);
  const PgmImage out_img = from_gray(smoothed, in_img.maxval, in_img.format);

  OutputSink sink(args.output);
  write_pgm(sink.stream(), out_img);
  sink.finish(args.output);
  return 0;
}

struct ExperimentArgs {
  std::string name;
  std::string out = "-";
  double cutoff = 1.0;
  double start = 0.0;
  double stop = 10.0;
  double step = 0.05;
  double d = 0.6;
  double offset_step = 0.05;
  std::vector<std::size_t> sizes{100000, 200000, 400000};
  std::size_t repetitions = 11;
  std::uint64_t seed = 42;
};

int run_experiment(const ExperimentArgs& args) {
  std::size_t count = 0;
  auto emit = [&](auto&& rows) {
    OutputSink sink(args.out);
    write_csv(sink.stream(), std::span(rows));
    sink.finish(args.out);
    count = rows.size();
  };

  if (args.name == "outlier-influence") {
    const auto cfg = OutlierSweepConfig::with_positions(linear_grid(args.start, args.stop, args.step), Cutoff(args.cutoff));
    emit(outlier_influence_sweep(cfg));
  } else if (args.name == "grid-effect") {
    if (!(args.offset_step > 0.0)) throw Error(ErrorKind::InvalidArgument, "--offset-step must be > 0");
    std::vector<double> offsets;
    for (double o : linear_grid(0.0, 1.0, args.offset_step)) {
      if (o < 1.0 - 1e-12) offsets.push_back(o);
    }
    emit(grid_effect_sweep(GridSweepConfig::make(args.d, std::move(offsets))));
  } else {
    emit(linearity_benchmark(args.sizes, args.repetitions, args.seed));
  }
  std::cerr << "wrote " << count << " rows\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 1D robust mean under the truncated quadratic error norm"};
  app.require_subcommand(1);

  MeanArgs mean_args;
  auto* mean_cmd = app.add_subcommand("mean", "Robust mean of a sample file ('-' for stdin)");
  mean_cmd->add_option("input", mean_args.input, "Sample file, one value (or value weight) per line");
  mean_cmd->add_option("-c,--cutoff", mean_args.cutoff, "Truncation distance c")->required();
  mean_cmd->add_flag("--weighted", mean_args.weighted, "Use the second column as sample weights");
  mean_cmd->add_flag("--oracle", mean_args.oracle, "Cross-check against the brute-force minimizer");
  mean_cmd->add_option("--oracle-limit", mean_args.oracle_limit, "Largest sample count for --oracle");

  SmoothArgs smooth_args;
  auto* smooth_cmd = app.add_subcommand("smooth", "Edge-preserving smoothing of a PGM image");
  smooth_cmd->add_option("-i,--input", smooth_args.input, "Input P2/P5 image ('-' for stdin)")->required();
  smooth_cmd->add_option("-o,--output", smooth_args.output, "Output image ('-' for stdout)")->required();
  smooth_cmd->add_option("-r,--radius", smooth_args.radius, "Window radius (side 2r+1)");
  smooth_cmd->add_option("-s,--sigma", smooth_args.sigma, "Gaussian spatial weight sigma in pixels");
  smooth_cmd->add_option("-c,--cutoff", smooth_args.cutoff, "Intensity cutoff c");
  smooth_cmd->add_option("-j,--threads", smooth_args.threads, "Worker threads (0 = all cores)");

  ExperimentArgs exp_args;
  auto* exp_cmd = app.add_subcommand("experiment", "Emit an experiment table as CSV");
  exp_cmd->add_option("name", exp_args.name, "outlier-influence | grid-effect | bench")
      ->required()
      ->check(CLI::IsMember({"outlier-influence", "grid-effect", "bench"}));
  exp_cmd->add_option("-o,--out", exp_args.out, "Output CSV path ('-' for stdout)");
  exp_cmd->add_option("--cutoff", exp_args.cutoff, "outlier-influence: cutoff c (also the channel spacing)");
  exp_cmd->add_option("--start", exp_args.start, "outlier-influence: first outlier position");
  exp_cmd->add_option("--stop", exp_args.stop, "outlier-influence: last outlier position");
  exp_cmd->add_option("--step", exp_args.step, "outlier-influence: position step");
  exp_cmd->add_option("--d", exp_args.d, "grid-effect: half-spread of the symmetric pair");
  exp_cmd->add_option("--offset-step", exp_args.offset_step, "grid-effect: x0 offset step within [0, 1)");
  exp_cmd->add_option("--sizes", exp_args.sizes, "bench: increasing sample counts")->delimiter(',');
  exp_cmd->add_option("--repetitions", exp_args.repetitions, "bench: timed runs per size (>= 5)");
  exp_cmd->add_option("--seed", exp_args.seed, "bench: data seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "robust1d: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (*mean_cmd) return run_mean(mean_args);
    if (*smooth_cmd) return run_smooth(smooth_args);
    return run_experiment(exp_args);
  } catch (const Error& e) {
    std::cerr << "robust1d: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "robust1d: " << e.what() << '\n';
    return 1;
  }
}
