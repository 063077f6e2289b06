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

#include "ctchaos/experiments.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace ctchaos {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr unsigned kMaxOtocQubitsWithoutLong = 12;

std::string_view blocks_name(BlockCount b) { return b == BlockCount::Four ? "4" : "5"; }

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  return fmt::format("{}", x);
}

template <typename F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

BlockPlan make_plan(
    const ExperimentConfig& config, HeatingKind arch, BlockCount blocks, unsigned heat_depth) {
  BlockPlan plan;
  plan.blocks = blocks;
  plan.t_layer_size = config.t_count;
  plan.initial_t_layer = config.initial_t_layer;
  plan.heating.kind = arch;
  plan.heating.depth_units = heat_depth;
  plan.heating.policy.cnot_pair_fraction = config.cnot_pair_fraction;
  plan.heating.swap_realization = config.swap_realization;
  return plan;
}

std::string circuit_tag(
    std::string_view experiment, unsigned n, HeatingKind arch, BlockCount blocks,
    unsigned heat_depth, unsigned instance) {
  return fmt::format(
      "{}_n{}_{}_b{}_h{}_i{}", experiment, n, heating_kind_name(arch), blocks_name(blocks),
      heat_depth, instance);
}

void write_file(const fs::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string file_base(Experiment e) {
  switch (e) {
    case Experiment::SpectrumDepth: return "spectrum_depth";
    case Experiment::SpectrumArch: return "spectrum_arch";
    case Experiment::OtocCompare: return "otoc_compare";
    case Experiment::CheckCover: return "check_cover";
    case Experiment::EmitRefs: return "reference_curves";
  }
  return "experiment";
}

json config_json(const ExperimentConfig& c) {
  json j;
  j["experiment"] = experiment_name(c.experiment);
  j["n"] = c.n_list;
  j["instances"] = c.instances.value_or(0);
  j["seed"] = c.master_seed;
  std::vector<std::string> archs;
  for (auto a : c.archs) archs.emplace_back(heating_kind_name(a));
  j["arch"] = archs;
  std::vector<std::string> blocks;
  for (auto b : c.blocks) blocks.emplace_back(blocks_name(b));
  j["blocks"] = blocks;
  j["heat_depth"] = c.heat_depths;
  j["t_count"] = c.t_count ? json(*c.t_count) : json("n");
  j["initial_t_layer"] = c.initial_t_layer;
  j["cnot_pair_fraction"] = c.cnot_pair_fraction;
  j["swap_cnots"] = c.swap_realization == SwapRealization::ThreeCnot ? 3 : 1;
  j["v_op"] = to_string(c.v_op);
  j["w_op"] = c.w_op ? to_string(*c.w_op) : "X(n-1)";
  j["stride"] = c.stride;
  j["dump_circuits"] = c.dump_circuits;
  j["rng"] = "splitmix64-counter";
  return j;
}

std::vector<SpectrumRow> run_spectrum_grid(const ExperimentConfig& config) {
  struct Cell {
    unsigned n;
    HeatingKind arch;
    BlockCount blocks;
    unsigned heat_depth;
    unsigned instance;
  };
  std::vector<Cell> cells;
  for (unsigned n : config.n_list) {
    for (HeatingKind arch : config.archs) {
      if (arch == HeatingKind::Bitonic && !std::has_single_bit(n)) continue;
      for (BlockCount blocks : config.blocks) {
        for (unsigned h : config.heat_depths) {
          for (unsigned i = 0; i < *config.instances; ++i) {
            cells.push_back({n, arch, blocks, h, i});
          }
        }
      }
    }
  }
  std::vector<SpectrumRow> rows(cells.size());
  std::string exp_name(experiment_name(config.experiment));
  parallel_for(cells.size(), config.jobs, [&](std::size_t idx) {
    const Cell& c = cells[idx];
    Rng rng = instance_stream(config.master_seed, c.n, c.instance);
    auto trial = run_spectrum_trial(c.n, make_plan(config, c.arch, c.blocks, c.heat_depth), rng);
    if (config.dump_circuits) {
      write_file(
          config.output_dir / "circuits" /
              (circuit_tag(exp_name, c.n, c.arch, c.blocks, c.heat_depth, c.instance) + ".circ"),
          serialize(trial.circuit));
    }
    rows[idx] = SpectrumRow{
        c.instance, c.n, c.arch, c.blocks, c.heat_depth, trial.final_stats.mean_r,
        trial.final_stats.excluded_count, trial.final_stats.total_pairs(), config.master_seed};
  });
  return rows;
}

std::vector<std::vector<OtocRow>> run_otoc_grid(
    const ExperimentConfig& config, std::vector<OtocInstanceSummary>& summaries) {
  struct Cell {
    unsigned n;
    BlockCount blocks;
    unsigned instance;
  };
  std::vector<Cell> cells;
  for (BlockCount blocks : config.blocks) {
    for (unsigned n : config.n_list) {
      for (unsigned i = 0; i < *config.instances; ++i) cells.push_back({n, blocks, i});
    }
  }
  HeatingKind arch = config.archs.front();
  unsigned heat_depth = config.heat_depths.front();
  std::vector<std::vector<OtocRow>> per_cell(cells.size());
  summaries.assign(cells.size(), {});
  parallel_for(cells.size(), config.jobs, [&](std::size_t idx) {
    const Cell& c = cells[idx];
    OtocConfig oc;
    oc.v = config.v_op;
    oc.w = config.w_op;
    oc.stride = config.stride;
    oc.plan = make_plan(config, arch, c.blocks, heat_depth);
    Rng rng = instance_stream(config.master_seed, c.n, c.instance);
    auto trace = otoc_depth_sweep(c.n, oc, rng);
    if (config.dump_circuits) {
      write_file(
          config.output_dir / "circuits" /
              (circuit_tag("otoc-compare", c.n, arch, c.blocks, heat_depth, c.instance) + ".circ"),
          serialize(trace.circuit));
    }
    auto& rows = per_cell[idx];
    for (std::size_t k = 0; k < trace.depths.size(); ++k) {
      rows.push_back(OtocRow{
          c.instance, c.n, arch, c.blocks, trace.depths[k], trace.re_f[k], trace.im_f[k],
          trace.second_t_layer_depth, trace.v, trace.w, config.master_seed});
    }
    auto s = summarize_otoc_trace(trace);
    s.instance = c.instance;
    s.n = c.n;
    s.blocks = c.blocks;
    summaries[idx] = s;
  });
  std::vector<std::vector<OtocRow>> by_blocks;
  std::size_t idx = 0;
  for (std::size_t b = 0; b < config.blocks.size(); ++b) {
    std::vector<OtocRow> rows;
    for (std::size_t k = 0; k < config.n_list.size() * *config.instances; ++k, ++idx) {
      rows.insert(rows.end(), per_cell[idx].begin(), per_cell[idx].end());
    }
    by_blocks.push_back(std::move(rows));
  }
  return by_blocks;
}

json spectrum_summary_json(const std::vector<SpectrumGroupSummary>& groups) {
  json out = json::array();
  for (const auto& g : groups) {
    out.push_back({{"n", g.n},
                   {"arch", heating_kind_name(g.arch)},
                   {"blocks", blocks_name(g.blocks)},
                   {"heat_depth", g.heat_depth},
                   {"instances", g.instances},
                   {"valid_instances", g.valid_instances},
                   {"mean_r", g.mean_r},
                   {"stderr", g.stderr_r},
                   {"excluded_fraction", g.excluded_fraction}});
  }
  return out;
}

json otoc_summary_json(
    const std::vector<OtocRow>& rows, const std::vector<OtocInstanceSummary>& instances,
    BlockCount blocks) {
  std::map<std::pair<unsigned, std::size_t>, std::pair<double, unsigned>> per_depth;
  for (const auto& r : rows) {
    auto& acc = per_depth[{r.n, r.depth}];
    acc.first += r.re_f;
    acc.second += 1;
  }
  json depth_json = json::array();
  for (const auto& [key, acc] : per_depth) {
    depth_json.push_back(
        {{"n", key.first}, {"depth", key.second}, {"mean_re_f", acc.first / acc.second},
         {"instances", acc.second}});
  }
  json inst_json = json::array();
  for (const auto& s : instances) {
    if (s.blocks != blocks) continue;
    inst_json.push_back({{"n", s.n},
                         {"instance", s.instance},
                         {"mean_abs_re_f_post_t2", s.mean_abs_post},
                         {"max_abs_re_f_post_t2", s.max_abs_post},
                         {"max_abs_re_f", s.max_abs_any}});
  }
  return {{"blocks", blocks_name(blocks)}, {"per_depth", depth_json}, {"per_instance", inst_json}};
}

}  // namespace

std::string_view experiment_name(Experiment e) {
  switch (e) {
    case Experiment::SpectrumDepth: return "spectrum-depth";
    case Experiment::SpectrumArch: return "spectrum-arch";
    case Experiment::OtocCompare: return "otoc-compare";
    case Experiment::CheckCover: return "check-cover";
    case Experiment::EmitRefs: return "emit-refs";
  }
  return "?";
}

std::optional<Experiment> parse_experiment(std::string_view text) {
  for (auto e : {Experiment::SpectrumDepth, Experiment::SpectrumArch, Experiment::OtocCompare,
                 Experiment::CheckCover, Experiment::EmitRefs}) {
    if (text == experiment_name(e)) return e;
  }
  return std::nullopt;
}

ExperimentConfig with_defaults(ExperimentConfig c) {
  switch (c.experiment) {
    case Experiment::SpectrumDepth:
      if (c.n_list.empty()) c.n_list = {12};
      if (!c.instances) c.instances = 15;
      if (c.archs.empty()) c.archs = {HeatingKind::CausalRandom};
      if (c.heat_depths.empty()) c.heat_depths = {1, 2, 3};
      if (c.blocks.empty()) c.blocks = {BlockCount::Four};
      break;
    case Experiment::SpectrumArch:
      if (c.n_list.empty()) c.n_list = {8, 12, 16};
      if (!c.instances) c.instances = 20;
      if (c.archs.empty()) {
        c.archs = {HeatingKind::CausalRandom, HeatingKind::Bitonic,
                   HeatingKind::CyclicPermutation};
      }
      if (c.heat_depths.empty()) c.heat_depths = {1};
      if (c.blocks.empty()) c.blocks = {BlockCount::Four};
      break;
    case Experiment::OtocCompare:
      if (c.n_list.empty()) c.n_list = {10};
      if (!c.instances) c.instances = 10;
      if (c.archs.empty()) c.archs = {HeatingKind::CausalRandom};
      if (c.heat_depths.empty()) c.heat_depths = {1};
      if (c.blocks.empty()) c.blocks = {BlockCount::Four, BlockCount::Five};
      break;
    case Experiment::CheckCover:
    case Experiment::EmitRefs:
      break;
  }
  return c;
}

void validate_experiment_config(const ExperimentConfig& c) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (c.experiment == Experiment::CheckCover) {
    if (c.circuit_file.empty()) fail("check-cover needs --circuit-file");
    return;
  }
  if (c.experiment == Experiment::EmitRefs) {
    if (c.reference_samples == 0) fail("reference sample count must be positive");
    if (c.histogram_bins == 0) fail("histogram bin count must be positive");
    return;
  }
  bool otoc = c.experiment == Experiment::OtocCompare;
  if (!c.instances || *c.instances < 1) fail("instances must be >= 1");
  if (c.n_list.empty()) fail("no qubit counts given");
  if (c.archs.empty() || c.blocks.empty() || c.heat_depths.empty()) {
    fail("empty architecture, block or heat-depth list");
  }
  if (otoc && (c.archs.size() != 1 || c.heat_depths.size() != 1)) {
    fail("otoc-compare takes exactly one --arch and one --heat-depth");
  }
  if (!(c.cnot_pair_fraction > 0.0 && c.cnot_pair_fraction <= 1.0)) {
    fail("cnot pair fraction must lie in (0, 1]");
  }
  for (unsigned h : c.heat_depths) {
    if (h == 0) fail("heat depth must be positive");
  }
  if (c.stride == 0) fail("stride must be positive");
  bool explicit_bitonic_ok = false;
  for (unsigned n : c.n_list) {
    if (n < 2 || n > kMaxQubits) {
      fail(fmt::format("qubit count {} outside [2, {}]", n, kMaxQubits));
    }
    if (!otoc && n < 4) fail(fmt::format("spectrum statistics need n >= 4, got {}", n));
    if (otoc && n + 1 > kMaxQubits) {
      fail(fmt::format("OTOC uses an ancilla; n = {} exceeds {}", n, kMaxQubits - 1));
    }
    if (otoc && n > kMaxOtocQubitsWithoutLong && !c.allow_long) {
      fail(fmt::format("OTOC at n = {} is long-running; pass --long to allow it", n));
    }
    if (static_cast<unsigned>(c.cnot_pair_fraction * n / 2.0) == 0) {
      fail(fmt::format("cnot pair fraction {} engages no pair at n = {}", c.cnot_pair_fraction, n));
    }
    if (c.t_count && *c.t_count > n) {
      fail(fmt::format("t-count {} exceeds qubit count {}", *c.t_count, n));
    }
    if (std::has_single_bit(n)) explicit_bitonic_ok = true;
    if (otoc) {
      PauliOp w = c.w_op.value_or(PauliOp{Pauli::X, n - 1});
      if (c.v_op.qubit >= n || w.qubit >= n) {
        fail(fmt::format("OTOC operators {} / {} out of range for n = {}", to_string(c.v_op),
                         to_string(w), n));
      }
      if (c.v_op.qubit == w.qubit) fail("V and W must act on different qubits");
    }
  }
  bool several_archs = c.archs.size() > 1;
  for (HeatingKind a : c.archs) {
    if (a != HeatingKind::Bitonic) continue;
    // In a multi-architecture sweep bitonic is simply skipped where it does
    // not apply; on its own every n must be a power of two.
    bool ok = several_archs ? explicit_bitonic_ok
                            : std::all_of(c.n_list.begin(), c.n_list.end(),
                                          [](unsigned n) { return std::has_single_bit(n); });
    if (!ok) fail("bitonic heating needs power-of-two qubit counts");
  }
}

Rng instance_stream(std::uint64_t master_seed, unsigned n_qubits, unsigned instance) {
  return Rng(master_seed).fork(n_qubits).fork(instance);
}

OtocInstanceSummary summarize_otoc_trace(const OtocTrace& trace) {
  OtocInstanceSummary s;
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < trace.depths.size(); ++k) {
    double a = std::abs(trace.re_f[k]);
    s.max_abs_any = std::max(s.max_abs_any, a);
    if (trace.depths[k] >= trace.second_t_layer_depth) {
      sum += a;
      ++count;
      s.max_abs_post = std::max(s.max_abs_post, a);
    }
  }
  s.mean_abs_post = count ? sum / static_cast<double>(count) : 0.0;
  return s;
}

std::vector<SpectrumGroupSummary> summarize_spectrum(const std::vector<SpectrumRow>& rows) {
  using Key = std::tuple<unsigned, int, int, unsigned>;
  std::map<Key, std::vector<const SpectrumRow*>> groups;
  std::vector<Key> order;
  for (const auto& r : rows) {
    Key key{r.n, static_cast<int>(r.arch), static_cast<int>(r.blocks), r.heat_depth};
    auto [it, inserted] = groups.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(&r);
  }
  std::vector<SpectrumGroupSummary> out;
  for (const auto& key : order) {
    const auto& members = groups[key];
    SpectrumGroupSummary g;
    g.n = members.front()->n;
    g.arch = members.front()->arch;
    g.blocks = members.front()->blocks;
    g.heat_depth = members.front()->heat_depth;
    g.instances = static_cast<unsigned>(members.size());
    double sum = 0.0, sum_sq = 0.0;
    std::size_t excluded = 0, total = 0;
    for (const auto* r : members) {
      excluded += r->excluded_count;
      total += r->total_pairs;
      if (std::isnan(r->mean_r)) continue;
      ++g.valid_instances;
      sum += r->mean_r;
      sum_sq += r->mean_r * r->mean_r;
    }
    g.excluded_fraction = total ? static_cast<double>(excluded) / static_cast<double>(total) : 0.0;
    if (g.valid_instances == 0) {
      g.mean_r = std::nan("");
      g.stderr_r = std::nan("");
    } else {
      double k = g.valid_instances;
      g.mean_r = sum / k;
      double var = k > 1 ? std::max(0.0, (sum_sq - k * g.mean_r * g.mean_r) / (k - 1)) : 0.0;
      g.stderr_r = std::sqrt(var / k);
    }
    out.push_back(g);
  }
  return out;
}

std::string spectrum_csv(const std::vector<SpectrumRow>& rows) {
  std::string out(kSpectrumCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += fmt::format(
        "{},{},{},{},{},{},{},{},{}\n", r.instance, r.n, heating_kind_name(r.arch),
        blocks_name(r.blocks), r.heat_depth, format_double(r.mean_r), r.excluded_count,
        r.total_pairs, r.seed);
  }
  return out;
}

std::string otoc_csv(const std::vector<OtocRow>& rows) {
  std::string out(kOtocCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += fmt::format(
        "{},{},{},{},{},{},{},{},{},{},{}\n", r.instance, r.n, heating_kind_name(r.arch),
        blocks_name(r.blocks), r.depth, format_double(r.re_f), format_double(r.im_f),
        r.second_t_depth, to_string(r.v_op), to_string(r.w_op), r.seed);
  }
  return out;
}

std::vector<ReferenceHistogram> sample_reference_histograms(
    std::uint64_t seed, unsigned samples, unsigned bins) {
  Rng root(seed);
  std::vector<ReferenceHistogram> out;
  for (auto ensemble : {ReferenceEnsemble::Poisson, ReferenceEnsemble::GUE}) {
    Rng rng = root.fork(ensemble_name(ensemble));
    std::vector<double> counts(bins, 0.0);
    std::size_t total = 0;
    for (unsigned s = 0; s < samples; ++s) {
      auto spectrum = ensemble == ReferenceEnsemble::Poisson ? sample_poisson_spectrum(256, rng)
                                                             : sample_gue_spectrum(128, rng);
      for (double r : level_spacing_ratios(spectrum).r_values) {
        auto bin = std::min<std::size_t>(static_cast<std::size_t>(r * bins), bins - 1);
        counts[bin] += 1.0;
        ++total;
      }
    }
    ReferenceHistogram h;
    h.ensemble = ensemble;
    double width = 1.0 / bins;
    for (unsigned b = 0; b <= bins; ++b) h.bin_edges.push_back(b * width);
    for (double c : counts) h.density.push_back(total ? c / (static_cast<double>(total) * width) : 0.0);
    out.push_back(std::move(h));
  }
  return out;
}

std::string reference_csv(const std::vector<ReferenceHistogram>& histograms) {
  std::string out(kReferenceCsvHeader);
  out += '\n';
  for (auto e : {ReferenceEnsemble::Poisson, ReferenceEnsemble::GUE}) {
    out += fmt::format("guide,{},,,{:.2f}\n", ensemble_name(e), reference_mean(e));
  }
  for (const auto& h : histograms) {
    for (std::size_t b = 0; b < h.density.size(); ++b) {
      out += fmt::format(
          "hist,{},{},{},{}\n", ensemble_name(h.ensemble), format_double(h.bin_edges[b]),
          format_double(h.bin_edges[b + 1]), format_double(h.density[b]));
    }
  }
  return out;
}

fs::path emit_reference_curves(
    const fs::path& dir, std::uint64_t seed, unsigned samples, unsigned bins) {
  fs::create_directories(dir);
  fs::path path = dir / "reference_curves.csv";
  write_file(path, reference_csv(sample_reference_histograms(seed, samples, bins)));
  return path;
}

std::string cover_report_json(const CoverReport& report) {
  json j;
  j["covered"] = report.covered;
  j["cover_depth"] = report.cover_depth ? json(*report.cover_depth) : json(nullptr);
  json pairs = json::array();
  for (std::size_t i = 0; i < report.uncovered_pairs.size() && i < 50; ++i) {
    pairs.push_back({report.uncovered_pairs[i].first, report.uncovered_pairs[i].second});
  }
  j["uncovered_pairs"] = pairs;
  j["uncovered_count"] = report.uncovered_pairs.size();
  return j.dump(2);
}

ExperimentResult compute_experiment(const ExperimentConfig& raw) {
  ExperimentConfig config = with_defaults(raw);
  validate_experiment_config(config);
  ExperimentResult result;
  switch (config.experiment) {
    case Experiment::SpectrumDepth:
    case Experiment::SpectrumArch:
      result.spectrum_rows = run_spectrum_grid(config);
      result.spectrum_summary = summarize_spectrum(result.spectrum_rows);
      break;
    case Experiment::OtocCompare: {
      auto by_blocks = run_otoc_grid(config, result.otoc_summary);
      for (auto& rows : by_blocks) {
        result.otoc_rows.insert(result.otoc_rows.end(), rows.begin(), rows.end());
      }
      break;
    }
    case Experiment::CheckCover:
    case Experiment::EmitRefs:
      throw ConfigError("compute_experiment handles grid experiments only");
  }
  return result;
}

ExperimentResult run_experiment(ExperimentConfig raw) {
  auto started = std::chrono::steady_clock::now();
  ExperimentConfig config = with_defaults(std::move(raw));
  validate_experiment_config(config);
  fs::create_directories(config.output_dir);
  if (config.dump_circuits) fs::create_directories(config.output_dir / "circuits");

  ExperimentResult result;
  std::string base = file_base(config.experiment);
  json summary;
  json schemas;
  if (config.experiment == Experiment::EmitRefs) {
    result.written.push_back(emit_reference_curves(
        config.output_dir, config.master_seed, config.reference_samples, config.histogram_bins));
    schemas["reference_curves.csv"] = kReferenceCsvHeader;
  } else if (config.experiment == Experiment::CheckCover) {
    throw ConfigError("check-cover does not write experiment files");
  } else {
    result = compute_experiment(config);
    if (config.experiment == Experiment::OtocCompare) {
      json sets = json::array();
      for (BlockCount blocks : config.blocks) {
        std::vector<OtocRow> rows;
        std::copy_if(result.otoc_rows.begin(), result.otoc_rows.end(), std::back_inserter(rows),
                     [&](const OtocRow& r) { return r.blocks == blocks; });
        fs::path csv = config.output_dir / fmt::format("{}_blocks{}.csv", base, blocks_name(blocks));
        write_file(csv, otoc_csv(rows));
        result.written.push_back(csv);
        schemas[csv.filename().string()] = kOtocCsvHeader;
        sets.push_back(otoc_summary_json(rows, result.otoc_summary, blocks));
      }
      summary["otoc"] = sets;
    } else {
      fs::path csv = config.output_dir / (base + ".csv");
      write_file(csv, spectrum_csv(result.spectrum_rows));
      result.written.push_back(csv);
      schemas[csv.filename().string()] = kSpectrumCsvHeader;
      summary["spectrum"] = spectrum_summary_json(result.spectrum_summary);
    }
    summary["config"] = config_json(config);
    fs::path summary_path = config.output_dir / (base + "_summary.json");
    write_file(summary_path, summary.dump(2) + "\n");
    result.written.push_back(summary_path);
  }

  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  json manifest;
  manifest["config"] = config_json(config);
  manifest["version"] = kVersion;
  manifest["wall_time_s"] = wall;
  std::vector<std::string> files;
  for (const auto& p : result.written) files.push_back(p.filename().string());
  manifest["files"] = files;
  manifest["schemas"] = schemas;
  fs::path manifest_path = config.output_dir / (base + "_manifest.json");
  write_file(manifest_path, manifest.dump(2) + "\n");
  result.written.push_back(manifest_path);
  return result;
}

}  // namespace ctchaos
