// Copyright 2026 The mixsig Authors.
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

// Python bindings. Rationals cross the boundary as fractions.Fraction (ints
// and "p/q" strings are accepted on input); signals are dicts mapping type to
// mass and schemes are lists of signals.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mixsig/benchmarks.h"
#include "mixsig/error.h"
#include "mixsig/instance_io.h"
#include "mixsig/model.h"
#include "mixsig/report.h"
#include "mixsig/scheme_optimizer.h"
#include "mixsig/transforms.h"

namespace py = pybind11;

namespace pybind11::detail {

template <>
struct type_caster<mixsig::Rational> {
  PYBIND11_TYPE_CASTER(mixsig::Rational, const_name("fractions.Fraction"));

  bool load(handle src, bool) {
    if (!src) return false;
    try {
      object fraction = module_::import("fractions").attr("Fraction")(src);
      std::string num = str(fraction.attr("numerator"));
      std::string den = str(fraction.attr("denominator"));
      value = mixsig::Rational(mpz_class(num), mpz_class(den));
      value.canonicalize();
      return true;
    } catch (const error_already_set&) {
      return false;
    }
  }

  static handle cast(const mixsig::Rational& q, return_value_policy, handle) {
    return module_::import("fractions")
        .attr("Fraction")(q.get_str())
        .release();
  }
};

}  // namespace pybind11::detail

namespace mixsig {
namespace {

using PySignal = std::map<int, Rational>;
using PyScheme = std::vector<PySignal>;

SignalingScheme ToScheme(const PyScheme& signals) {
  SignalingScheme scheme;
  for (const PySignal& s : signals) scheme.signals.push_back(Signal::Create(s));
  return scheme;
}

PyScheme FromScheme(const SignalingScheme& scheme) {
  PyScheme out;
  for (const Signal& s : scheme.signals) out.push_back(s.alloc());
  return out;
}

PsiMatrix ToPsi(const RationalMatrix& entries) {
  return PsiMatrix::Create(entries);
}

py::dict TransformDict(const TransformReport& report) {
  py::dict out;
  out["before"] = FromScheme(report.before);
  out["after"] = FromScheme(report.after);
  out["revenue_before"] = report.revenue_before;
  out["revenue_after"] = report.revenue_after;
  out["steps_applied"] = report.steps_applied;
  return out;
}

py::object JsonToPython(const nlohmann::json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

}  // namespace
}  // namespace mixsig

PYBIND11_MODULE(_core, m) {
  using namespace mixsig;
  m.doc() = "Revenue-optimal signaling for probabilistic second-price auctions";

  // The module keeps the exception class alive.
  static PyObject* error_type =
      py::exception<Error>(m, "MixsigError").ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc =
          py::reinterpret_borrow<py::object>(error_type)(e.what());
      exc.attr("code") = std::string(ErrorCodeName(e.code()));
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  py::class_<AuctionInstance>(m, "AuctionInstance")
      .def(py::init([](const RationalMatrix& valuations,
                       std::optional<std::vector<Rational>> prior) {
             if (prior) return AuctionInstance::Create(valuations, *prior);
             return AuctionInstance::WithUniformPrior(valuations);
           }),
           py::arg("valuations"), py::arg("prior") = py::none())
      .def_property_readonly("n", &AuctionInstance::num_bidders)
      .def_property_readonly("m", &AuctionInstance::num_types)
      .def_property_readonly("valuations", &AuctionInstance::valuations)
      .def_property_readonly("prior", &AuctionInstance::prior)
      .def("__eq__", [](const AuctionInstance& a, const AuctionInstance& b) {
        return a == b;
      });

  m.def("build_psi", [](const AuctionInstance& instance) {
    return BuildPsi(instance).entries();
  });
  m.def(
      "from_divisible",
      [](const RationalMatrix& psi, std::optional<std::vector<Rational>> prior) {
        return FromDivisible(ToPsi(psi), prior);
      },
      py::arg("psi"), py::arg("prior") = py::none());
  m.def("winner_tables", [](const RationalMatrix& psi) {
    WinnerTables t = ComputeWinnerTables(ToPsi(psi));
    py::dict out;
    out["first"] = t.first;
    out["second"] = t.second;
    out["won"] = t.won;
    return out;
  });
  m.def("signal_bids", [](const RationalMatrix& psi, const PySignal& s) {
    return SignalBids(ToPsi(psi), Signal::Create(s));
  });
  m.def("signal_revenue", [](const RationalMatrix& psi, const PySignal& s) {
    return SignalRevenue(ToPsi(psi), Signal::Create(s));
  });
  m.def("scheme_revenue", [](const RationalMatrix& psi, const PyScheme& s) {
    return SchemeRevenue(ToPsi(psi), ToScheme(s));
  });

  m.def(
      "optimal_mixed",
      [](const RationalMatrix& psi, const std::string& method) {
        MixedSolution sol = OptimalMixed(ToPsi(psi), ParseLpMethod(method));
        return py::make_tuple(sol.revenue, FromScheme(sol.scheme));
      },
      py::arg("psi"), py::arg("method") = "equalbid");
  m.def("optimal_pure", [](const RationalMatrix& psi) {
    PureSchemeResult r = OptimalPureRevenue(ToPsi(psi));
    return py::make_tuple(r.revenue, r.partition);
  });
  m.def("benchmarks", [](const RationalMatrix& psi) {
    BenchmarkReport b = ComputeBenchmarks(ToPsi(psi));
    py::dict out;
    out["B"] = b.b;
    out["i0"] = b.i0;
    out["Btilde"] = b.b_tilde;
    out["iStar"] = b.i_star;
    return out;
  });
  m.def("revenue_upper_bound", [](const RationalMatrix& psi) {
    return RevenueUpperBound(ToPsi(psi));
  });
  m.def("lower_bound_certificate", [](const RationalMatrix& psi) {
    CertificateResult c = RevenueLowerBoundCertificate(ToPsi(psi));
    return py::make_tuple(c.revenue, FromScheme(c.scheme));
  });

  m.def("merge_signals", [](const RationalMatrix& psi, const PyScheme& s) {
    return TransformDict(MergeSignals(ToPsi(psi), ToScheme(s)));
  });
  m.def("equalize_bids", [](const RationalMatrix& psi, const PyScheme& s) {
    return TransformDict(EqualizeBids(ToPsi(psi), ToScheme(s)));
  });
  m.def("absorb_singletons", [](const RationalMatrix& psi, const PyScheme& s) {
    return TransformDict(AbsorbSingletons(ToPsi(psi), ToScheme(s)));
  });

  m.def("gap_instance", &GapInstance, py::arg("k"));
  m.def("identity_instance", &IdentityInstance, py::arg("m"));
  m.def("figure2_psi", [] { return Figure2Psi().entries(); });
  m.def("random_instance", &RandomInstance, py::arg("seed"), py::arg("n"),
        py::arg("m"), py::arg("max_value"));

  m.def("parse_instance",
        [](const std::string& text) { return ParseInstance(text); });
  m.def("write_instance", &WriteInstance);
  m.def(
      "solve_report",
      [](const RationalMatrix& psi, const std::string& method) {
        return JsonToPython(
            ReportToJson(SolveReport(ToPsi(psi), ParseLpMethod(method))));
      },
      py::arg("psi"), py::arg("method") = "equalbid");
}
