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

#include "okp/okp.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "okp/acceptance.h"
#include "okp/error.h"
#include "okp/family.h"
#include "okp/harness.h"
#include "okp/instance.h"
#include "okp/minimax.h"
#include "okp/numerics.h"
#include "okp/oracle.h"
#include "okp/report.h"

struct okp_instance {
  okp::Instance value;
};

struct okp_family {
  okp::ChainFamily value;
};

struct okp_distribution {
  okp::ThresholdDistribution value;
};

namespace {

thread_local std::string last_error;

okp_status StatusOf(okp::ErrorCode code) {
  switch (code) {
    case okp::ErrorCode::kInvalidArgument:
      return OKP_INVALID_ARGUMENT;
    case okp::ErrorCode::kParse:
      return OKP_PARSE_ERROR;
    case okp::ErrorCode::kIo:
      return OKP_IO_ERROR;
    case okp::ErrorCode::kLimitExceeded:
      return OKP_LIMIT_EXCEEDED;
    case okp::ErrorCode::kNumerical:
      return OKP_NUMERICAL_ERROR;
    case okp::ErrorCode::kInternal:
      return OKP_INTERNAL_ERROR;
  }
  return OKP_INTERNAL_ERROR;
}

// Runs `body`, translating exceptions into a status and the thread-local
// error message.
template <typename F>
okp_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return OKP_OK;
  } catch (const okp::Error& e) {
    last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return OKP_LIMIT_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return OKP_INTERNAL_ERROR;
  }
}

void RequireOut(const void* out) {
  okp::Require(out != nullptr, "output pointer is null");
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

okp::ReportFormat Format(const char* name) {
  return okp::ParseReportFormat(name == nullptr ? "json" : name);
}

okp::ExperimentConfig MakeConfig(const char* algorithm,
                                 const okp_run_options* options) {
  okp::Require(algorithm != nullptr, "algorithm is null");
  okp_run_options defaults;
  okp_run_options_init(&defaults);
  const okp_run_options& o = options == nullptr ? defaults : *options;
  okp::ExperimentConfig config;
  config.algorithm = okp::ParseAlgorithm(algorithm);
  config.seed = o.seed;
  config.trials = o.trials;
  if (o.eps != nullptr) config.eps = okp::ParseRational(o.eps);
  if (o.p != nullptr) config.p = okp::ParseRational(o.p);
  config.n = o.n;
  config.threads = o.threads;
  if (okp::IsRandomized(config.algorithm)) {
    okp::Require(config.trials >= 1, "trials must be at least 1");
  }
  return config;
}

}  // namespace

extern "C" {

const char* okp_version(void) { return "1.0.0"; }

const char* okp_status_name(okp_status status) {
  switch (status) {
    case OKP_OK:
      return "ok";
    case OKP_INVALID_ARGUMENT:
      return "invalid argument";
    case OKP_PARSE_ERROR:
      return "parse error";
    case OKP_IO_ERROR:
      return "io error";
    case OKP_LIMIT_EXCEEDED:
      return "limit exceeded";
    case OKP_NUMERICAL_ERROR:
      return "numerical error";
    case OKP_INTERNAL_ERROR:
      return "internal error";
  }
  return "unknown status";
}

const char* okp_last_error(void) { return last_error.c_str(); }

void okp_string_free(char* s) { std::free(s); }

okp_status okp_instance_parse(const char* text, okp_instance** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(text != nullptr, "text is null");
    *out = new okp_instance{okp::ParseInstanceText(text)};
  });
}

okp_status okp_instance_load(const char* path, okp_instance** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(path != nullptr, "path is null");
    *out = new okp_instance{okp::LoadInstanceFile(path)};
  });
}

void okp_instance_free(okp_instance* instance) { delete instance; }

size_t okp_instance_size(const okp_instance* instance) {
  return instance == nullptr ? 0 : instance->value.size();
}

okp_status okp_instance_text(const okp_instance* instance, char** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(instance != nullptr, "instance is null");
    *out = CopyString(okp::FormatInstanceText(instance->value));
  });
}

okp_status okp_solve(const okp_instance* instance, const char* format,
                     char** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(instance != nullptr, "instance is null");
    const okp::OptResult result = okp::OptUnbounded(instance->value);
    *out = CopyString(okp::FormatSolve(instance->value, result, Format(format)));
  });
}

void okp_run_options_init(okp_run_options* options) {
  if (options == nullptr) return;
  const okp::ExperimentConfig defaults;
  options->seed = defaults.seed;
  options->trials = defaults.trials;
  options->eps = nullptr;
  options->p = nullptr;
  options->n = 0;
  options->threads = 0;
}

okp_status okp_run(const char* algorithm, const okp_instance* instance,
                   const char* id, const okp_run_options* options,
                   const char* format, char** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(instance != nullptr, "instance is null");
    const okp::ExperimentConfig config = MakeConfig(algorithm, options);
    const okp::RatioReport report = okp::EvaluateInstance(
        config, instance->value, id == nullptr ? "instance" : id);
    *out = CopyString(okp::FormatRatioReport(report, Format(format)));
  });
}

okp_status okp_evaluate(const char* algorithm, const okp_family* family,
                        const okp_run_options* options, const char* format,
                        char** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(family != nullptr, "family is null");
    const okp::ExperimentConfig config = MakeConfig(algorithm, options);
    const okp::RatioReport report = okp::EvaluateFamily(config, family->value);
    *out = CopyString(okp::FormatRatioReport(report, Format(format)));
  });
}

okp_status okp_family_generate(const char* spec, okp_family** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(spec != nullptr, "spec is null");
    *out = new okp_family{
        okp::ChainFamily::Generate(okp::ParseFamilySpec(spec))};
  });
}

void okp_family_free(okp_family* family) { delete family; }

size_t okp_family_instance_count(const okp_family* family) {
  return family == nullptr ? 0 : family->value.instance_count();
}

okp_status okp_family_instance(const okp_family* family, size_t index,
                               okp_instance** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(family != nullptr, "family is null");
    okp::Require(index < family->value.instance_count(),
                 "instance index out of range");
    *out = new okp_instance{
        family->value.InstanceAt(family->value.terminals()[index])};
  });
}

okp_status okp_family_describe(const okp_family* family, const char* format,
                               char** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(family != nullptr, "family is null");
    if (format != nullptr && std::strcmp(format, "emit") == 0) {
      *out = CopyString(okp::FormatFamilyText(family->value));
    } else {
      *out = CopyString(okp::FormatFamily(family->value, Format(format)));
    }
  });
}

okp_status okp_minimax(const okp_family* family, okp_minimax_mode mode,
                       int advice_bits, const char* format, char** out) {
  return Guard([&] {
    RequireOut(out);
    okp::Require(family != nullptr, "family is null");
    const okp::ChainFamily& f = family->value;
    const okp::ReportFormat fmt = Format(format);
    switch (mode) {
      case OKP_MINIMAX_DETERMINISTIC:
        *out = CopyString(okp::FormatDetMinimax(f, okp::DetMinimax(f), fmt));
        break;
      case OKP_MINIMAX_ADVICE:
        *out = CopyString(okp::FormatAdviceMinimax(
            f, okp::DetMinimaxWithAdvice(f, advice_bits), fmt));
        break;
      case OKP_MINIMAX_RANDOMIZED:
        *out = CopyString(
            okp::FormatRandomizedChain(f, okp::RandMinimaxChain(f), fmt));
        break;
      case OKP_MINIMAX_DISTINCT_DECISIONS:
        *out = CopyString(okp::FormatDistinctDecisions(
            f, okp::DistinctFirstDecisions(f), fmt));
        break;
      default:
        okp::Fail(okp::ErrorCode::kInvalidArgument, "unknown minimax mode");
    }
  });
}

okp_status okp_distribution_compute(double tolerance, okp_distribution** out) {
  return Guard([&] {
    RequireOut(out);
    *out = new okp_distribution{okp::ThresholdDistribution::Compute(tolerance)};
  });
}

void okp_distribution_free(okp_distribution* dist) { delete dist; }

double okp_distribution_p_half(const okp_distribution* dist) {
  return dist == nullptr ? 0 : dist->value.p_half();
}

double okp_distribution_p_two_thirds(const okp_distribution* dist) {
  return dist == nullptr ? 0 : dist->value.p_two_thirds();
}

double okp_distribution_cdf(const okp_distribution* dist, double x) {
  return dist == nullptr ? 0 : dist->value.Cdf(x);
}

double okp_distribution_sample(const okp_distribution* dist, double u) {
  return dist == nullptr ? 0 : dist->value.Sample(u);
}

okp_status okp_constants(double tolerance, const char* format, char** out) {
  return Guard([&] {
    RequireOut(out);
    const okp::ThresholdDistribution& dist =
        okp::SharedThresholdDistribution(tolerance);
    const okp::MonotoneCheck monotone = okp::CheckGMonotone(dist, 10'000);
    *out = CopyString(okp::FormatConstants(dist, monotone, Format(format)));
  });
}

okp_status okp_accept(uint64_t seed, int threads, int criterion,
                      okp_line_callback callback, void* user_data,
                      int* all_passed) {
  return Guard([&] {
    RequireOut(all_passed);
    okp::Require(criterion >= 0 && criterion <= okp::kCriterionCount,
                 "criterion out of range");
    okp::AcceptanceOptions options;
    options.seed = seed;
    options.threads = threads;
    if (criterion > 0) options.only = {criterion};
    if (callback != nullptr) {
      options.on_result = [&](const okp::CriterionResult& r) {
        callback(okp::FormatCriterionLine(r).c_str(), r.passed ? 1 : 0,
                 user_data);
      };
    }
    bool passed = true;
    for (const okp::CriterionResult& r : okp::RunAcceptance(options)) {
      passed = passed && r.passed;
    }
    *all_passed = passed ? 1 : 0;
  });
}

}  // extern "C"
