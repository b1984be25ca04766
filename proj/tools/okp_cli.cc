// Copyright 2026 The okp Authors
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

// Command-line front end over the C API.
//
// Exit codes: 0 when every check passes, 1 when an acceptance criterion
// fails, 2 on usage or library errors.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "okp/okp.h"

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitError = 2;

struct Settings {
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::string eps;
  std::string p;
  int n = 0;
  int threads = 0;
  double tol = 1e-10;
  std::string format = "text";
  std::string output;
};

class LibraryError : public std::runtime_error {
 public:
  explicit LibraryError(okp_status status)
      : std::runtime_error(std::string(okp_status_name(status)) + ": " +
                           okp_last_error()) {}
};

void Check(okp_status status) {
  if (status != OKP_OK) throw LibraryError(status);
}

struct StringDeleter {
  void operator()(char* s) const { okp_string_free(s); }
};
struct InstanceDeleter {
  void operator()(okp_instance* p) const { okp_instance_free(p); }
};
struct FamilyDeleter {
  void operator()(okp_family* p) const { okp_family_free(p); }
};

using OwnedString = std::unique_ptr<char, StringDeleter>;

std::unique_ptr<okp_instance, InstanceDeleter> LoadInstance(
    const std::string& path) {
  okp_instance* raw = nullptr;
  Check(okp_instance_load(path.c_str(), &raw));
  return std::unique_ptr<okp_instance, InstanceDeleter>(raw);
}

std::unique_ptr<okp_family, FamilyDeleter> MakeFamily(const std::string& spec) {
  okp_family* raw = nullptr;
  Check(okp_family_generate(spec.c_str(), &raw));
  return std::unique_ptr<okp_family, FamilyDeleter>(raw);
}

void Emit(const Settings& settings, char* raw) {
  OwnedString text(raw);
  if (settings.output.empty()) {
    std::cout << text.get();
    return;
  }
  std::ofstream file(settings.output);
  if (!file) throw std::runtime_error("cannot write " + settings.output);
  file << text.get();
}

std::uint64_t DefaultSeed() {
  okp_run_options defaults;
  okp_run_options_init(&defaults);
  if (const char* env = std::getenv("OKP_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::runtime_error("OKP_SEED is not an unsigned integer: " +
                               std::string(env));
    }
  }
  return defaults.seed;
}

// Applies config-file values to every option not given on the command line.
void ApplyConfig(const std::string& path, CLI::App& app, Settings& settings) {
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot read config " + path);
  const nlohmann::json config = nlohmann::json::parse(file);
  if (!config.is_object()) throw std::runtime_error("config must be an object");
  auto given = [&](const std::string& name) {
    for (const CLI::App* sub : app.get_subcommands()) {
      for (const CLI::Option* opt : sub->get_options()) {
        if (opt->check_lname(name) && opt->count() > 0) return true;
      }
    }
    return false;
  };
  for (const auto& [key, value] : config.items()) {
    if (given(key)) continue;
    if (key == "seed") {
      settings.seed = value.get<std::uint64_t>();
    } else if (key == "trials") {
      settings.trials = value.get<std::uint64_t>();
    } else if (key == "eps") {
      settings.eps = value.is_string() ? value.get<std::string>() : value.dump();
    } else if (key == "p") {
      settings.p = value.is_string() ? value.get<std::string>() : value.dump();
    } else if (key == "n") {
      settings.n = value.get<int>();
    } else if (key == "threads") {
      settings.threads = value.get<int>();
    } else if (key == "tol") {
      settings.tol = value.get<double>();
    } else if (key == "format") {
      settings.format = value.get<std::string>();
    } else if (key == "output") {
      settings.output = value.get<std::string>();
    } else {
      throw std::runtime_error("unknown config key '" + key + "'");
    }
  }
}

okp_run_options RunOptions(const Settings& settings) {
  okp_run_options options;
  okp_run_options_init(&options);
  options.seed = settings.seed;
  options.trials = settings.trials;
  options.eps = settings.eps.empty() ? nullptr : settings.eps.c_str();
  options.p = settings.p.empty() ? nullptr : settings.p.c_str();
  options.n = settings.n;
  options.threads = settings.threads;
  return options;
}

void AddRunFlags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--seed", s.seed, "master seed (default: $OKP_SEED)");
  cmd->add_option("--trials", s.trials, "Monte Carlo trials per instance");
  cmd->add_option("--eps", s.eps, "advice accuracy, e.g. 1/10");
  cmd->add_option("--p", s.p, "mixture probability of greedy, e.g. 3/4");
  cmd->add_option("--n", s.n, "prefix strategy resolution");
  cmd->add_option("--threads", s.threads, "worker threads (0: all cores)");
}

void AddOutputFlags(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "json, text or csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  cmd->add_option("-o,--output", s.output, "write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online unbounded knapsack experiments"};
  app.require_subcommand(1);
  Settings settings;
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with default flags")
      ->check(CLI::ExistingFile);
  app.set_version_flag("--version", std::string(okp_version()));

  std::string file, algorithm, family_spec;
  int advice_bits = -1;
  bool randomized = false, distinct = false, emit = false;
  int criterion = 0;

  CLI::App* solve = app.add_subcommand("solve", "exact offline optimum");
  solve->add_option("file", file, "instance file")->required();
  AddOutputFlags(solve, settings);

  CLI::App* run = app.add_subcommand("run", "run an algorithm on an instance");
  run->add_option("alg", algorithm, "algorithm name")->required();
  run->add_option("file", file, "instance file")->required();
  AddRunFlags(run, settings);
  AddOutputFlags(run, settings);

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "run an algorithm on a family");
  evaluate->add_option("alg", algorithm, "algorithm name")->required();
  evaluate->add_option("--family", family_spec, "kind:key=value,...")
      ->required();
  AddRunFlags(evaluate, settings);
  AddOutputFlags(evaluate, settings);

  CLI::App* family = app.add_subcommand("family", "describe a family");
  family->add_option("spec", family_spec, "kind:key=value,...")->required();
  family->add_flag("--emit", emit, "print the instances in the text format");
  AddOutputFlags(family, settings);

  CLI::App* minimax = app.add_subcommand("minimax", "exact minimax ratio");
  minimax->add_option("spec", family_spec, "kind:key=value,...")->required();
  CLI::Option* bits_opt =
      minimax->add_option("--advice-bits", advice_bits, "strategies = 2^b");
  CLI::Option* rand_opt =
      minimax->add_flag("--randomized", randomized, "equalizing chain solver");
  CLI::Option* distinct_opt = minimax->add_flag(
      "--distinct", distinct, "distinct optimal first decisions");
  bits_opt->excludes(rand_opt)->excludes(distinct_opt);
  rand_opt->excludes(distinct_opt);
  AddOutputFlags(minimax, settings);

  CLI::App* constants =
      app.add_subcommand("constants", "threshold distribution constants");
  constants->add_option("--tol", settings.tol, "quadrature tolerance");
  AddOutputFlags(constants, settings);

  CLI::App* accept = app.add_subcommand("accept", "run the acceptance suite");
  accept->add_option("--seed", settings.seed, "master seed");
  accept->add_option("--threads", settings.threads, "worker threads");
  accept->add_option("--criterion", criterion, "run one criterion (1-14)")
      ->check(CLI::Range(0, 14));

  try {
    settings.seed = DefaultSeed();
    okp_run_options defaults;
    okp_run_options_init(&defaults);
    settings.trials = defaults.trials;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty()) ApplyConfig(config_path, app, settings);
    const char* format = settings.format.c_str();
    char* out = nullptr;
    if (solve->parsed()) {
      auto instance = LoadInstance(file);
      Check(okp_solve(instance.get(), format, &out));
      Emit(settings, out);
    } else if (run->parsed()) {
      auto instance = LoadInstance(file);
      const okp_run_options options = RunOptions(settings);
      Check(okp_run(algorithm.c_str(), instance.get(), file.c_str(), &options,
                    format, &out));
      Emit(settings, out);
    } else if (evaluate->parsed()) {
      auto f = MakeFamily(family_spec);
      const okp_run_options options = RunOptions(settings);
      Check(okp_evaluate(algorithm.c_str(), f.get(), &options, format, &out));
      Emit(settings, out);
    } else if (family->parsed()) {
      auto f = MakeFamily(family_spec);
      Check(okp_family_describe(f.get(), emit ? "emit" : format, &out));
      Emit(settings, out);
    } else if (minimax->parsed()) {
      auto f = MakeFamily(family_spec);
      okp_minimax_mode mode = OKP_MINIMAX_DETERMINISTIC;
      if (bits_opt->count() > 0) mode = OKP_MINIMAX_ADVICE;
      if (randomized) mode = OKP_MINIMAX_RANDOMIZED;
      if (distinct) mode = OKP_MINIMAX_DISTINCT_DECISIONS;
      Check(okp_minimax(f.get(), mode, advice_bits, format, &out));
      Emit(settings, out);
    } else if (constants->parsed()) {
      Check(okp_constants(settings.tol, format, &out));
      Emit(settings, out);
    } else if (accept->parsed()) {
      int all_passed = 0;
      Check(okp_accept(
          settings.seed, settings.threads, criterion,
          [](const char* line, int, void*) { std::cout << line << std::endl; },
          nullptr, &all_passed));
      std::cout << (all_passed ? "all criteria passed" : "some criteria failed")
                << std::endl;
      return all_passed ? 0 : kExitFailedCheck;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
