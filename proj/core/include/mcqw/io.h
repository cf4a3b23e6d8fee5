// Copyright 2026 The mcqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MCQW_IO_H_
#define MCQW_IO_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mcqw/coin_state.h"
#include "mcqw/entanglement.h"
#include "mcqw/fit.h"
#include "mcqw/lab.h"
#include "mcqw/walk.h"

namespace mcqw {

// 17 significant digits, enough to round-trip any double.
std::string FormatDouble(double value);

// site,probability
void WriteDistributionCsv(std::ostream& out, const WalkState& state);

// coin_index,site,re,im for every entry of the amplitude tensor.
void WriteSnapshotCsv(std::ostream& out, const WalkState& state);

struct CTildeRow {
  int t = 0;
  double c1_tilde = 0.0;
  double c2_tilde = 0.0;
};

// t,c1_tilde,c2_tilde
void WriteCTildeCsv(std::ostream& out, const std::vector<CTildeRow>& rows);

// site,weight,Q with an empty Q cell where the site is undefined.
void WriteProfileCsv(std::ostream& out,
                     const std::vector<ProfileEntry>& profile);

// t,Q@<site>,... with empty cells for undefined entries.
void WriteQTimeSeriesCsv(std::ostream& out, const QTimeSeries& series);

// param,ic2_q1..ic2_qM,mean_direct,mean_integral,second_moment,variance
void WriteSweepCsv(std::ostream& out, const SweepReport& report);

std::string SweepReportJson(const SweepReport& report);
std::string FitSummaryJson(const FitResult& fit);
std::string MeanLawJson(const MeanLawReport& report);
std::string VarianceLawJson(const VarianceLawReport& report);

// Plain-text coin state:
//   coins=M
//   <bitstring> <re> <im>
//   ...
// Unlisted basis states are zero; blank lines and lines starting with '#'
// are ignored. A norm deviation below 1e-9 is renormalized, anything larger
// is a NormalizationError.
CoinState ReadStateFile(std::istream& in);
CoinState ReadStateFile(const std::filesystem::path& path);
void WriteStateFile(std::ostream& out, const CoinState& coin);

// Parsed form of a --state argument:
//   <family>:key=value,key=value   catalog state
//   file:<path>                    state file
//   random                         Haar-like random state (needs M, seed)
struct StateSpec {
  enum class Kind { kCatalog, kFile, kRandom };
  Kind kind = Kind::kCatalog;
  std::string family;
  std::map<std::string, double> params;
  std::string path;
};

StateSpec ParseStateSpec(std::string_view text);

// "key=value,key=value" -> map. Throws ParseError on malformed input.
std::map<std::string, double> ParseParams(std::string_view text);

// Writes `content` to a temporary file beside `path` and renames it over
// `path`.
void AtomicWriteFile(const std::filesystem::path& path,
                     std::string_view content);

}  // namespace mcqw

#endif  // MCQW_IO_H_
