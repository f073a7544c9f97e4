// Copyright 2026 The hyperrec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV renderings of library results.
//
// Rationals become {"num": "...", "den": "..."} with decimal strings, so no
// precision is lost; most objects also carry a "float" rendering next to
// them. CSV output has a header row, LF line endings and never needs
// quoting. CSV floats use 17 significant digits.

#ifndef HYPERREC_IO_H_
#define HYPERREC_IO_H_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperrec/global_profile.h"
#include "hyperrec/growth.h"
#include "hyperrec/local_profile.h"
#include "hyperrec/montecarlo.h"
#include "hyperrec/oracle.h"
#include "hyperrec/stats.h"

namespace hyperrec {

using Json = nlohmann::ordered_json;

// {"num", "den"}.
Json rational_json(const Rational& q);
// {"num", "den", "float"}.
Json rational_with_float(const Rational& q);
// Inverse of rational_json. Throws DomainError on malformed input.
Rational rational_from_json(const Json& j);

// printf("%.17g").
std::string format_double(double x);

Json tree_state_json(const TreeState& state);

Json local_pmf_json(const LocalPmf& pmf);
// r,numerator,denominator,float
std::string local_pmf_csv(const LocalPmf& pmf);

Json local_moments_json(int theta, std::uint64_t n, std::uint64_t k,
                        const LocalMoments& moments);

Json global_moments_json(const GlobalMoments& moments, const CovMatrix& cov);
Json cov_json(const CovMatrix& cov);
Json martingale_factors_json(int theta, const MartingaleFactors& factors);

// {"theta", "n", "mass": {"x1,x2": {"num", "den"}}}.
Json joint_distribution_json(const JointDistribution& dist);
Json history_ensemble_json(const HistoryEnsemble& ensemble);

Json limit_law_json(const LimitLaw& law);
Json clt_params_json(const CltParams& params);

// r,count,frequency
std::string local_sample_csv(const LocalSample& sample);
Json local_sample_json(const LocalSample& sample);
// replicate,x1,x2[,martingale]
std::string global_sample_csv(const GlobalSample& sample);
Json global_sample_json(const GlobalSample& sample);

Json test_report_json(const TestReport& report);

}  // namespace hyperrec

#endif  // HYPERREC_IO_H_
