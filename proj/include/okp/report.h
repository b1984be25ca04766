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

// Report emission. Exact rationals are written as "p/q" strings next to a
// double approximation; an unbounded ratio is the string "unbounded".

#ifndef OKP_REPORT_H_
#define OKP_REPORT_H_

#include <string>
#include <string_view>

#include "okp/family.h"
#include "okp/harness.h"
#include "okp/instance.h"
#include "okp/minimax.h"
#include "okp/numerics.h"
#include "okp/oracle.h"

namespace okp {

enum class ReportFormat { kJson, kText, kCsv };

ReportFormat ParseReportFormat(std::string_view name);

std::string FormatRatioReport(const RatioReport& report, ReportFormat format);

std::string FormatSolve(const Instance& instance, const OptResult& result,
                        ReportFormat format);

std::string FormatFamily(const ChainFamily& family, ReportFormat format);

std::string FormatConstants(const ThresholdDistribution& dist,
                            const MonotoneCheck& monotone,
                            ReportFormat format);

std::string FormatDetMinimax(const ChainFamily& family,
                             const DetMinimaxResult& result,
                             ReportFormat format);
std::string FormatAdviceMinimax(const ChainFamily& family,
                                const AdviceMinimaxResult& result,
                                ReportFormat format);
std::string FormatRandomizedChain(const ChainFamily& family,
                                  const RandomizedChainResult& result,
                                  ReportFormat format);
std::string FormatDistinctDecisions(const ChainFamily& family,
                                    const DistinctDecisions& result,
                                    ReportFormat format);

}  // namespace okp

#endif  // OKP_REPORT_H_
