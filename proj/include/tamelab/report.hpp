#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tamelab/analysis.hpp"

namespace tamelab {

using Json = nlohmann::json;

/// Integers are emitted as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
inline Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

inline Json to_json(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(std::move(row));
  }
  return a;
}

inline Json to_json(const ModMatrix& m) {
  Json a = Json::array();
  for (const auto& r : m.to_rows()) a.push_back(r);
  return a;
}

inline Json to_json(const Verdict& v) {
  Json j{{"id", v.id},
         {"hypothesis", v.hypothesis},
         {"conclusion", v.conclusion ? Json(*v.conclusion) : Json(nullptr)},
         {"agree", v.agree},
         {"citation", v.citation}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline Json to_json(const Scenario& s) {
  Json j{{"d", s.d}, {"p", s.p}, {"tau", to_json(s.tau)}, {"seed", s.seed},
         {"flags", {{"strictly_henselian", s.strictly_henselian}}}};
  if (!s.selectors.empty()) j["flags"]["suites"] = s.selectors;
  if (s.polarization) j["polarization"] = to_json(*s.polarization);
  if (s.n) j["n"] = *s.n;
  return j;
}

inline Json to_json(const AnalysisReport& r) {
  Json j;
  j["semistable"] = r.semistable;
  j["potentially_good"] = r.potentially_good;
  j["purely_additive"] = r.purely_additive;
  j["min_degree"] = r.min_degree;
  if (r.neron) {
    j["a"] = r.neron->a;
    j["u"] = r.neron->u;
    j["t"] = r.neron->t;
    j["phi"] = to_json(r.neron->phi);
    j["phi_prime"] = to_json(r.neron->phi_prime);
  } else {
    for (const char* k : {"a", "u", "t", "phi", "phi_prime"}) j[k] = nullptr;
  }
  Json tor = Json::object();
  for (const auto& [n, t] : r.torsion) {
    tor[std::to_string(n)] = {{"fixed_order", to_json(t.fixed_order)}, {"structure", to_json(t.structure)}};
  }
  j["torsion"] = tor;
  Json vs = Json::array();
  for (const auto& v : r.verdicts) vs.push_back(to_json(v));
  j["verdicts"] = vs;
  return j;
}

namespace detail {

inline long json_long(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw Error(ErrorKind::InvalidArgument, where + ": expected an integer");
  return v.get<long>();
}

inline IntMatrix json_matrix(const Json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) throw Error(ErrorKind::InvalidArgument, where + ": expected a non-empty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Json& r = v[i];
    const std::string rw = where + "[" + std::to_string(i) + "]";
    if (!r.is_array()) throw Error(ErrorKind::InvalidArgument, rw + ": expected an array");
    if (!rows.empty() && r.size() != rows.front().size()) {
      throw Error(ErrorKind::InvalidArgument, rw + ": has " + std::to_string(r.size()) + " entries, expected " +
                                                  std::to_string(rows.front().size()));
    }
    std::vector<Integer> row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const Json& e = r[j];
      const std::string ew = rw + "[" + std::to_string(j) + "]";
      if (e.is_number_integer()) {
        row.emplace_back(e.get<long>());
      } else if (e.is_string()) {
        Integer z;
        if (z.set_str(e.get<std::string>(), 10) != 0) throw Error(ErrorKind::InvalidArgument, ew + ": not an integer");
        row.push_back(z);
      } else {
        throw Error(ErrorKind::InvalidArgument, ew + ": expected an integer");
      }
    }
    if (row.empty()) throw Error(ErrorKind::InvalidArgument, rw + ": empty row");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

}  // namespace detail

/// Parses a scenario object; unknown keys are rejected.
inline Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidArgument, "scenario must be a JSON object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "d" && key != "p" && key != "tau" && key != "polarization" && key != "n" && key != "flags" &&
        key != "seed") {
      throw Error(ErrorKind::InvalidArgument, "unknown scenario field \"" + key + "\"");
    }
  }
  Scenario s;
  if (!j.contains("d")) throw Error(ErrorKind::InvalidArgument, "missing field \"d\"");
  if (!j.contains("tau")) throw Error(ErrorKind::InvalidArgument, "missing field \"tau\"");
  const long d = detail::json_long(j["d"], "d");
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "d: must be at least 1");
  s.d = static_cast<std::size_t>(d);
  if (j.contains("p")) {
    const long p = detail::json_long(j["p"], "p");
    if (p < 0) throw Error(ErrorKind::InvalidArgument, "p: must be >= 0");
    if (p > 1 && (factorize(static_cast<std::uint64_t>(p)).size() != 1 ||
                  factorize(static_cast<std::uint64_t>(p))[0].second != 1)) {
      throw Error(ErrorKind::InvalidArgument, "p: must be 0 or a prime");
    }
    if (p == 1) throw Error(ErrorKind::InvalidArgument, "p: must be 0 or a prime");
    s.p = static_cast<std::uint64_t>(p);
  }
  s.tau = detail::json_matrix(j["tau"], "tau");
  if (j.contains("polarization")) s.polarization = detail::json_matrix(j["polarization"], "polarization");
  if (j.contains("n")) {
    const long n = detail::json_long(j["n"], "n");
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n: must be positive");
    s.n = static_cast<std::uint64_t>(n);
  }
  if (j.contains("flags")) {
    const Json& f = j["flags"];
    if (!f.is_object()) throw Error(ErrorKind::InvalidArgument, "flags: expected an object");
    for (const auto& [key, val] : f.items()) {
      if (key == "strictly_henselian") {
        if (!val.is_boolean()) throw Error(ErrorKind::InvalidArgument, "flags.strictly_henselian: expected a boolean");
        s.strictly_henselian = val.get<bool>();
      } else if (key == "suites") {
        if (!val.is_array()) throw Error(ErrorKind::InvalidArgument, "flags.suites: expected an array of strings");
        for (const auto& x : val) {
          if (!x.is_string()) throw Error(ErrorKind::InvalidArgument, "flags.suites: expected an array of strings");
          s.selectors.push_back(x.get<std::string>());
        }
      } else {
        throw Error(ErrorKind::InvalidArgument, "flags: unknown flag \"" + key + "\"");
      }
    }
  }
  if (j.contains("seed")) {
    const Json& sd = j["seed"];
    if (!sd.is_number_unsigned() && !(sd.is_number_integer() && sd.get<long>() >= 0)) {
      throw Error(ErrorKind::InvalidArgument, "seed: expected a non-negative integer");
    }
    s.seed = sd.get<std::uint64_t>();
  }
  validate(s);
  return s;
}

inline Scenario scenario_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

inline std::string join_integers(const std::vector<Integer>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].get_str();
  os << ')';
  return os.str();
}

inline std::string structure_string(const std::vector<Integer>& v) {
  if (v.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " x " : "") << "Z/" << v[i].get_str();
  return os.str();
}

inline std::string set_string(const std::vector<std::uint64_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

/// Lines "N(k) = {...}" for k = 1..kmax.
inline std::string nk_table(unsigned kmax) {
  std::string out;
  for (unsigned k = 1; k <= kmax; ++k) out += "N(" + std::to_string(k) + ") = " + set_string(n_set(k).members) + "\n";
  return out;
}

inline std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "semistable:        " << (r.semistable ? "yes" : "no") << '\n';
  os << "potentially good:  " << (r.potentially_good ? "yes" : "no") << '\n';
  os << "purely additive:   " << (r.purely_additive ? "yes" : "no") << '\n';
  os << "minimal degree:    " << r.min_degree << '\n';
  if (r.neron) {
    os << "a, u, t:           " << r.neron->a << ", " << r.neron->u << ", " << r.neron->t << '\n';
    os << "Phi:               " << structure_string(r.neron->phi) << '\n';
    os << "Phi':              " << structure_string(r.neron->phi_prime) << '\n';
  }
  for (const auto& [n, t] : r.torsion) {
    os << "X_" << n << "(F):            " << structure_string(t.structure) << "  (order " << t.fixed_order.get_str()
       << ")\n";
  }
  os << "verdicts:\n";
  for (const auto& v : r.verdicts) {
    os << "  " << (v.agree ? "ok   " : "FAIL ") << v.id << "  hypothesis=" << (v.hypothesis ? "true" : "false")
       << " conclusion=" << (v.conclusion ? (*v.conclusion ? "true" : "false") : "n/a");
    if (!v.note.empty()) os << "  [" << v.note << "]";
    os << '\n';
  }
  return os.str();
}

}  // namespace tamelab
