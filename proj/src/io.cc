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


#include "hyperrec/io.h"

#include <cstdio>
#include <sstream>

#include "hyperrec/errors.h"

namespace hyperrec {

Json rational_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str(10)}, {"den", q.get_den().get_str(10)}};
}

Json rational_with_float(const Rational& q) {
  Json j = rational_json(q);
  j["float"] = to_double(q);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") ||
      !j["num"].is_string() || !j["den"].is_string()) {
    throw DomainError("rational JSON needs string fields num and den");
  }
  return parse_rational(j["num"].get<std::string>() + "/" +
                        j["den"].get<std::string>());
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json tree_state_json(const TreeState& state) {
  Json j;
  j["theta"] = state.theta();
  j["age"] = state.age();
  j["vertex_count"] = state.vertex_count();
  j["containment"] = std::vector<std::uint64_t>(state.containment().begin(),
                                                state.containment().end());
  if (state.record_edges()) j["edges"] = state.edges();
  return j;
}

Json local_pmf_json(const LocalPmf& pmf) {
  Json rows = Json::array();
  for (std::uint64_t r = 1; r <= pmf.support_max(); ++r) {
    Json row{{"r", r}};
    row.update(rational_with_float(pmf.at(r)));
    rows.push_back(std::move(row));
  }
  return Json{{"theta", pmf.theta}, {"n", pmf.n}, {"k", pmf.k}, {"pmf", rows}};
}

std::string local_pmf_csv(const LocalPmf& pmf) {
  std::ostringstream out;
  out << "r,numerator,denominator,float\n";
  for (std::uint64_t r = 1; r <= pmf.support_max(); ++r) {
    const Rational& p = pmf.at(r);
    out << r << ',' << p.get_num().get_str(10) << ','
        << p.get_den().get_str(10) << ',' << format_double(to_double(p)) << '\n';
  }
  return out.str();
}

Json local_moments_json(int theta, std::uint64_t n, std::uint64_t k,
                        const LocalMoments& moments) {
  return Json{{"theta", theta},
              {"n", n},
              {"k", k},
              {"mean", rational_with_float(moments.mean)},
              {"variance", rational_with_float(moments.variance)}};
}

Json cov_json(const CovMatrix& cov) {
  return Json{{"var1", rational_with_float(cov.var1)},
              {"cov12", rational_with_float(cov.cov12)},
              {"var2", rational_with_float(cov.var2)}};
}

Json global_moments_json(const GlobalMoments& moments, const CovMatrix& cov) {
  Json j{{"theta", moments.theta},
         {"n", moments.n},
         {"e1", rational_with_float(moments.e1)},
         {"e2", rational_with_float(moments.e2)},
         {"e11", rational_with_float(moments.e11)},
         {"e12", rational_with_float(moments.e12)},
         {"e22", rational_with_float(moments.e22)}};
  j.update(cov_json(cov));
  return j;
}

Json martingale_factors_json(int theta, const MartingaleFactors& factors) {
  return Json{{"theta", theta},
              {"n", factors.n},
              {"r", rational_with_float(factors.r)},
              {"s", rational_with_float(factors.s)}};
}

Json joint_distribution_json(const JointDistribution& dist) {
  Json mass = Json::object();
  for (const auto& [state, p] : dist.mass) {
    mass[std::to_string(state.first) + "," + std::to_string(state.second)] =
        rational_json(p);
  }
  return Json{{"theta", dist.theta}, {"n", dist.n}, {"mass", mass}};
}

Json history_ensemble_json(const HistoryEnsemble& ensemble) {
  Json outcomes = Json::array();
  for (const auto& o : ensemble.outcomes) {
    outcomes.push_back(Json{{"containment", o.containment},
                            {"probability", rational_json(o.probability)}});
  }
  return Json{{"theta", ensemble.theta},
              {"n", ensemble.n},
              {"count", ensemble.outcomes.size()},
              {"outcomes", outcomes}};
}

Json limit_law_json(const LimitLaw& law) {
  Json j{{"kind", to_string(law.kind)},
         {"regime", to_string(law.regime)},
         {"theta", law.theta}};
  switch (law.kind) {
    case LimitKind::kNormal:
      j["variance"] = law.variance;
      j["centering"] = law.centering;
      j["scale"] = law.scale;
      break;
    case LimitKind::kShiftedPoisson:
      j["shift"] = law.shift;
      j["rate"] = law.rate;
      break;
    case LimitKind::kPointMass:
      j["value"] = law.shift;
      break;
  }
  return j;
}

Json clt_params_json(const CltParams& params) {
  return Json{{"kind", "normal"},
              {"theta", params.theta},
              {"centering", "n/" + std::to_string(params.theta)},
              {"scale", params.scale},
              {"centering_coeff", rational_with_float(params.centering_coeff)},
              {"variance", rational_with_float(params.limit_variance)},
              {"vn_limit", rational_with_float(params.vn_limit)}};
}

std::string local_sample_csv(const LocalSample& sample) {
  std::ostringstream out;
  out << "r,count,frequency\n";
  const double total = static_cast<double>(sample.values.size());
  for (std::size_t i = 0; i < sample.counts.size(); ++i) {
    out << i + 1 << ',' << sample.counts[i] << ','
        << format_double(static_cast<double>(sample.counts[i]) / total) << '\n';
  }
  return out.str();
}

Json local_sample_json(const LocalSample& sample) {
  return Json{{"theta", sample.theta},
              {"n", sample.n},
              {"k", sample.k},
              {"replicates", sample.values.size()},
              {"mean", sample.mean},
              {"variance", sample.variance},
              {"counts", sample.counts}};
}

std::string global_sample_csv(const GlobalSample& sample) {
  std::ostringstream out;
  const bool with_m = !sample.martingale.empty();
  out << "replicate,x1,x2" << (with_m ? ",martingale\n" : "\n");
  for (std::size_t i = 0; i < sample.x1.size(); ++i) {
    out << i << ',' << sample.x1[i] << ',' << sample.x2[i];
    if (with_m) out << ',' << to_string(sample.martingale[i]);
    out << '\n';
  }
  return out.str();
}

Json global_sample_json(const GlobalSample& sample) {
  Json j{{"theta", sample.theta},
         {"n", sample.n},
         {"replicates", sample.x1.size()},
         {"mean1", sample.mean1},
         {"mean2", sample.mean2},
         {"var1", sample.var1},
         {"cov12", sample.cov12},
         {"var2", sample.var2},
         {"x1", sample.x1},
         {"x2", sample.x2}};
  if (!sample.martingale.empty()) {
    Json m = Json::array();
    for (const auto& q : sample.martingale) m.push_back(rational_json(q));
    j["martingale"] = std::move(m);
  }
  return j;
}

Json test_report_json(const TestReport& report) {
  Json j{{"name", report.name}, {"statistic", report.statistic}};
  if (report.dof) j["dof"] = *report.dof;
  if (report.p_value) j["p_value"] = *report.p_value;
  if (report.exact_pass) j["exact_pass"] = *report.exact_pass;
  j["passed"] = report.passed;
  j["reference"] = report.reference;
  Json details = Json::object();
  for (const auto& [key, value] : report.details) details[key] = value;
  j["details"] = std::move(details);
  return j;
}

}  // namespace hyperrec
