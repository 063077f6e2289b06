// Copyright 2026 The ctchaos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ctchaos/arch.hpp"
#include "ctchaos/gate.hpp"
#include "ctchaos/otoc.hpp"
#include "ctchaos/spectrum.hpp"

namespace ctchaos {

inline constexpr std::string_view kVersion = "ctchaos 0.3.0";

enum class Experiment { SpectrumDepth, SpectrumArch, OtocCompare, CheckCover, EmitRefs };

std::string_view experiment_name(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view text);

/// Rejected before any computation starts.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Everything needed to regenerate an experiment's data files.
 *
 * Empty lists mean "use the experiment's default grid" (see
 * `with_defaults`).
 */
struct ExperimentConfig {
  Experiment experiment = Experiment::SpectrumDepth;
  std::vector<unsigned> n_list;
  std::optional<unsigned> instances;
  std::uint64_t master_seed = 20260101;
  std::vector<HeatingKind> archs;
  std::vector<BlockCount> blocks;
  std::vector<unsigned> heat_depths;
  std::optional<unsigned> t_count;
  bool initial_t_layer = true;
  double cnot_pair_fraction = 1.0;
  SwapRealization swap_realization = SwapRealization::ThreeCnot;
  PauliOp v_op{Pauli::Z, 0};
  std::optional<PauliOp> w_op;
  unsigned stride = 1;
  /// 0 selects the hardware thread count.
  unsigned jobs = 0;
  std::filesystem::path output_dir = "results";
  bool dump_circuits = false;
  /// Permits OTOC runs above 12 system qubits (the n = 20 figure scale).
  bool allow_long = false;
  /// Reference-curve Monte-Carlo sample count per ensemble.
  unsigned reference_samples = 200;
  unsigned histogram_bins = 20;
  std::filesystem::path circuit_file;
};

/// Fills empty grid fields with the experiment defaults.
ExperimentConfig with_defaults(ExperimentConfig config);

/// Throws ConfigError. Expects `with_defaults` to have run.
void validate_experiment_config(const ExperimentConfig& config);

/// Stream for one (n, instance) cell; blocks fork named children from it.
Rng instance_stream(std::uint64_t master_seed, unsigned n_qubits, unsigned instance);

struct SpectrumRow {
  unsigned instance = 0;
  unsigned n = 0;
  HeatingKind arch = HeatingKind::CausalRandom;
  BlockCount blocks = BlockCount::Four;
  unsigned heat_depth = 1;
  double mean_r = 0.0;
  std::size_t excluded_count = 0;
  std::size_t total_pairs = 0;
  std::uint64_t seed = 0;
};

struct SpectrumGroupSummary {
  unsigned n = 0;
  HeatingKind arch = HeatingKind::CausalRandom;
  BlockCount blocks = BlockCount::Four;
  unsigned heat_depth = 1;
  unsigned instances = 0;
  /// Instances whose mean_r is defined (not every pair excluded).
  unsigned valid_instances = 0;
  double mean_r = 0.0;
  double stderr_r = 0.0;
  double excluded_fraction = 0.0;
};

struct OtocRow {
  unsigned instance = 0;
  unsigned n = 0;
  HeatingKind arch = HeatingKind::CausalRandom;
  BlockCount blocks = BlockCount::Four;
  std::size_t depth = 0;
  double re_f = 0.0;
  double im_f = 0.0;
  std::size_t second_t_depth = 0;
  PauliOp v_op;
  PauliOp w_op;
  std::uint64_t seed = 0;
};

/// Post-second-T-layer decay measures of one OTOC trace; "post" means
/// depth >= second_t_depth.
struct OtocInstanceSummary {
  unsigned instance = 0;
  unsigned n = 0;
  BlockCount blocks = BlockCount::Four;
  double mean_abs_post = 0.0;
  double max_abs_post = 0.0;
  double max_abs_any = 0.0;
};

struct ExperimentResult {
  std::vector<SpectrumRow> spectrum_rows;
  std::vector<SpectrumGroupSummary> spectrum_summary;
  std::vector<OtocRow> otoc_rows;
  std::vector<OtocInstanceSummary> otoc_summary;
  std::vector<std::filesystem::path> written;
};

/// Runs the configured experiment and writes its CSV, manifest and summary
/// files under config.output_dir. Rows are ordered independently of `jobs`.
ExperimentResult run_experiment(ExperimentConfig config);

/// Computes rows and summaries without touching the filesystem.
ExperimentResult compute_experiment(const ExperimentConfig& config);

OtocInstanceSummary summarize_otoc_trace(const OtocTrace& trace);

std::vector<SpectrumGroupSummary> summarize_spectrum(const std::vector<SpectrumRow>& rows);

/// CSV schemas, header line without newline.
inline constexpr std::string_view kSpectrumCsvHeader =
    "instance,n,arch,blocks,heat_depth,mean_r,excluded_count,total_pairs,seed";
inline constexpr std::string_view kOtocCsvHeader =
    "instance,n,arch,blocks,depth,re_f,im_f,second_t_depth,v_op,w_op,seed";
inline constexpr std::string_view kReferenceCsvHeader = "kind,ensemble,bin_lo,bin_hi,value";

std::string spectrum_csv(const std::vector<SpectrumRow>& rows);
std::string otoc_csv(const std::vector<OtocRow>& rows);

struct ReferenceHistogram {
  ReferenceEnsemble ensemble = ReferenceEnsemble::Poisson;
  std::vector<double> bin_edges;
  std::vector<double> density;
};

/// Monte-Carlo r histograms: Poisson spectra with 256 levels and GUE
/// spectra of dimension 128, `samples` spectra each.
std::vector<ReferenceHistogram> sample_reference_histograms(
    std::uint64_t seed, unsigned samples, unsigned bins);

std::string reference_csv(const std::vector<ReferenceHistogram>& histograms);

/// Writes reference_curves.csv (guide lines plus histograms) into `dir`.
std::filesystem::path emit_reference_curves(
    const std::filesystem::path& dir, std::uint64_t seed, unsigned samples, unsigned bins);

/// JSON for the check-cover subcommand; uncovered pairs truncated to 50.
std::string cover_report_json(const CoverReport& report);

}  // namespace ctchaos
