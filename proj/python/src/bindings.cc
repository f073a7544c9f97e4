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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "hyperrec/errors.h"
#include "hyperrec/global_profile.h"
#include "hyperrec/growth.h"
#include "hyperrec/io.h"
#include "hyperrec/local_profile.h"
#include "hyperrec/montecarlo.h"
#include "hyperrec/oracle.h"
#include "hyperrec/verify.h"

namespace py = pybind11;

namespace hyperrec {
namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::str(to_string(q)));
}

py::list fractions(const std::vector<Rational>& qs) {
  py::list out;
  for (const auto& q : qs) out.append(fraction(q));
  return out;
}

py::dict moments_dict(const GlobalMoments& m) {
  py::dict d;
  d["theta"] = m.theta;
  d["n"] = m.n;
  d["e1"] = fraction(m.e1);
  d["e2"] = fraction(m.e2);
  d["e11"] = fraction(m.e11);
  d["e12"] = fraction(m.e12);
  d["e22"] = fraction(m.e22);
  return d;
}

py::tuple cov_tuple(const CovMatrix& c) {
  return py::make_tuple(fraction(c.var1), fraction(c.cov12), fraction(c.var2));
}

RegimeSpec make_regime(const std::string& regime, std::uint64_t k,
                       const std::optional<std::string>& alpha) {
  if (regime == "fixed") return RegimeSpec::fixed(k);
  if (regime == "early") return RegimeSpec::early("");
  if (regime == "intermediate") {
    if (!alpha) throw RegimeError("intermediate regime needs alpha");
    return RegimeSpec::intermediate(parse_rational(*alpha));
  }
  if (regime == "late") return RegimeSpec::late();
  throw RegimeError("unknown regime '" + regime + "'");
}

}  // namespace
}  // namespace hyperrec

PYBIND11_MODULE(_core, m) {
  using namespace hyperrec;
  m.doc() = "Exact and simulated containment profiles of hyperrecursive trees";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "RangeError", PyExc_IndexError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_MemoryError);
  py::register_exception<InjectionError>(m, "InjectionError", PyExc_ValueError);
  py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);

  m.def("exact_pmf",
        [](int theta, std::uint64_t n, std::uint64_t k, std::uint64_t max_support) {
          PmfOptions options;
          options.max_support = max_support;
          return fractions(exact_pmf(theta, n, k, options).probabilities);
        },
        py::arg("theta"), py::arg("n"), py::arg("k"),
        py::arg("max_support") = kDefaultStirlingCap,
        "P(C_{n,k} = r) for r = 1..n-k+1.");
  m.def("pmf_oracle_convolution",
        [](int theta, std::uint64_t n, std::uint64_t k) {
          return fractions(pmf_oracle_convolution(theta, n, k).probabilities);
        },
        py::arg("theta"), py::arg("n"), py::arg("k"));
  m.def("exact_mean", [](int theta, std::uint64_t n, std::uint64_t k) {
    return fraction(exact_mean(theta, n, k));
  }, py::arg("theta"), py::arg("n"), py::arg("k"));
  m.def("exact_variance", [](int theta, std::uint64_t n, std::uint64_t k) {
    return fraction(exact_variance(theta, n, k));
  }, py::arg("theta"), py::arg("n"), py::arg("k"));

  m.def("mean_vector", [](int theta, std::uint64_t n) {
    const auto v = mean_closed_form(theta, n);
    return py::make_tuple(fraction(v.e1), fraction(v.e2));
  }, py::arg("theta"), py::arg("n"), "(E[X1], E[X2]) at age n.");
  m.def("second_moments", [](int theta, std::uint64_t n) {
    return moments_dict(second_moments_recurrence(theta, n));
  }, py::arg("theta"), py::arg("n"));
  m.def("exact_cov", [](int theta, std::uint64_t n) {
    return cov_tuple(exact_cov(theta, n));
  }, py::arg("theta"), py::arg("n"), "(Var X1, Cov(X1, X2), Var X2).");
  m.def("asymptotic_cov", [](int theta) { return cov_tuple(asymptotic_cov(theta)); },
        py::arg("theta"), "Limit of the covariance matrix divided by n.");
  m.def("martingale_factors", [](int theta, std::uint64_t n) {
    const auto f = martingale_factors(theta, n);
    return py::make_tuple(fraction(f.r), fraction(f.s));
  }, py::arg("theta"), py::arg("n"), "(r_n, s_n) with M_n = r_n X1 + s_n.");

  m.def("dp_joint_distribution",
        [](int theta, std::uint64_t n, std::uint64_t max_age) {
          const auto laws = dp_joint_distribution(theta, n, max_age);
          py::dict out;
          for (const auto& [state, p] : laws.back().mass) {
            out[py::make_tuple(state.first, state.second)] = fraction(p);
          }
          return out;
        },
        py::arg("theta"), py::arg("n"), py::arg("max_age") = kDefaultDpMaxAge,
        "{(x1, x2): probability} at age n.");
  m.def("history_count", [](int theta, std::uint64_t n) {
    return py::int_(py::str(to_string(history_count(theta, n))));
  }, py::arg("theta"), py::arg("n"));

  m.def("grow_tree",
        [](int theta, std::uint64_t steps, std::uint64_t seed) {
          TreeState state = init_tree(theta, true);
          DrawSource draws = DrawSource::seeded(seed);
          for (std::uint64_t i = 0; i < steps; ++i) grow(state, draws);
          py::dict d;
          d["theta"] = state.theta();
          d["age"] = state.age();
          d["containment"] = std::vector<std::uint64_t>(state.containment().begin(),
                                                        state.containment().end());
          d["edges"] = state.edges();
          return d;
        },
        py::arg("theta"), py::arg("steps"), py::arg("seed"));

  m.def("simulate_local",
        [](int theta, std::uint64_t n, std::uint64_t k, std::uint64_t replicates,
           std::uint64_t seed, unsigned threads) {
          SimConfig c;
          c.theta = theta;
          c.n = n;
          c.tracked_vertex = k;
          c.replicates = replicates;
          c.master_seed = seed;
          c.threads = threads;
          LocalSample s;
          {
            py::gil_scoped_release release;
            s = run_local(c);
          }
          py::dict d;
          d["values"] = s.values;
          d["counts"] = s.counts;
          d["mean"] = s.mean;
          d["variance"] = s.variance;
          return d;
        },
        py::arg("theta"), py::arg("n"), py::arg("k"), py::arg("replicates"),
        py::arg("seed"), py::arg("threads") = 1, "Samples of C_{n,k}.");
  m.def("simulate_global",
        [](int theta, std::uint64_t n, std::uint64_t replicates, std::uint64_t seed,
           unsigned threads) {
          SimConfig c;
          c.theta = theta;
          c.n = n;
          c.replicates = replicates;
          c.master_seed = seed;
          c.threads = threads;
          GlobalSample s;
          {
            py::gil_scoped_release release;
            s = run_global(c);
          }
          py::dict d;
          d["x1"] = s.x1;
          d["x2"] = s.x2;
          d["mean1"] = s.mean1;
          d["mean2"] = s.mean2;
          d["var1"] = s.var1;
          d["cov12"] = s.cov12;
          d["var2"] = s.var2;
          return d;
        },
        py::arg("theta"), py::arg("n"), py::arg("replicates"), py::arg("seed"),
        py::arg("threads") = 1, "Samples of (X1, X2).");

  m.def("limit_law",
        [](const std::string& regime, int theta, std::uint64_t k,
           std::optional<std::string> alpha) {
          return limit_law_json(limit_law(make_regime(regime, k, alpha), theta)).dump();
        },
        py::arg("regime"), py::arg("theta"), py::arg("k") = 0,
        py::arg("alpha") = py::none(), "JSON descriptor of the local limit law.");
  m.def("clt_params", [](int theta) { return clt_params_json(clt_params(theta)).dump(); },
        py::arg("theta"), "JSON descriptor of the global limit law.");

  m.def("run_criterion",
        [](int id, std::uint64_t seed, unsigned threads) {
          VerifyOptions options;
          options.seed = seed;
          options.threads = threads;
          CriterionResult r;
          {
            py::gil_scoped_release release;
            r = run_criterion(id, options);
          }
          return criterion_json(r).dump();
        },
        py::arg("id"), py::arg("seed") = kDefaultVerifySeed, py::arg("threads") = 1,
        "JSON line for one acceptance criterion.");

  m.def("run_cli",
        [](const std::vector<std::string>& args) {
          std::ostringstream out, err;
          const int code = cli::run_cli(args, out, err);
          return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "(exit_code, stdout, stderr) of the command line.");
}
