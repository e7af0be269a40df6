// fano: exact line counts on hypersurfaces and complete intersections.
//
// Exit codes: 0 success, 1 usage error, 2 cross-validation or verification
// failure.

#include <cstdio>
#include <exception>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano/complete_intersection.hpp"
#include "fano/errors.hpp"
#include "fano/methods.hpp"
#include "fano/schubert.hpp"

namespace {

using fano::ExactInt;
using json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const fano::Method& method_or_throw(const std::string& name) {
  const fano::Method* m = fano::find_method(name);
  if (m == nullptr) throw UsageError("unknown method '" + name + "'");
  return *m;
}

void require_accepts(const fano::Method& m, int n) {
  if (!m.accepts(n)) {
    throw UsageError(std::string(m.name) + " requires " + m.range() + ", got n = " + std::to_string(n));
  }
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

int cmd_lines(int n, const std::string& method, bool as_json) {
  if (method != "all") {
    const auto& m = method_or_throw(method);
    require_accepts(m, n);
    ExactInt v = m.compute(n);
    if (as_json) {
      emit({{"n", n}, {"method", m.name}, {"value", v.str()}});
    } else {
      std::cout << v << '\n';
    }
    return 0;
  }

  if (n < 2) throw UsageError("n must be >= 2, got " + std::to_string(n));
  std::vector<std::pair<std::string, ExactInt>> rows;
  for (const auto& m : fano::all_methods()) {
    if (m.accepts(n)) rows.emplace_back(std::string(m.name), m.compute(n));
  }
  bool agree = true;
  for (const auto& [name, v] : rows) agree = agree && v == rows.front().second;
  const char* verdict = agree ? "AGREE" : "DISAGREE";
  if (as_json) {
    for (const auto& [name, v] : rows) emit({{"n", n}, {"method", name}, {"value", v.str()}});
    emit({{"n", n},
          {"method", "all"},
          {"value", agree ? json(rows.front().second.str()) : json(nullptr)},
          {"verdict", verdict}});
  } else {
    for (const auto& [name, v] : rows) std::cout << std::left << std::setw(16) << name << ' ' << v << '\n';
    std::cout << verdict << '\n';
  }
  if (!agree) throw MismatchError("methods disagree at n = " + std::to_string(n));
  return 0;
}

int cmd_seq(int max_n, const std::string& method, bool as_json) {
  const auto& m = method_or_throw(method);
  if (max_n < 2) throw UsageError("max must be >= 2, got " + std::to_string(max_n));
  if (max_n < m.min_n) throw UsageError(std::string(m.name) + " requires " + m.range());
  require_accepts(m, max_n);
  for (int n = std::max(2, m.min_n); n <= max_n; ++n) {
    ExactInt v = m.compute(n);
    if (as_json) {
      emit({{"n", n}, {"method", m.name}, {"value", v.str()}});
    } else {
      std::cout << v << '\n';
    }
  }
  return 0;
}

int cmd_recursion(int n, bool as_json) {
  if (n < 3) throw UsageError("recursion coefficients require n >= 3, got " + std::to_string(n));
  auto row = fano::recursion_coeffs(n);
  if (as_json) {
    json b = json::object();
    for (int k = n - 1; k >= 2; --k) b[std::to_string(k)] = row.coeff(k).str();
    emit({{"n", n}, {"B", b}, {"F", row.f.str()}});
    return 0;
  }
  for (int k = n - 1; k >= 2; --k) std::cout << "B[" << k << "]=" << row.coeff(k) << ' ';
  std::cout << "F=" << row.f << '\n';
  return 0;
}

int cmd_genfun(int terms, bool as_json) {
  if (terms < 1) throw UsageError("terms must be >= 1, got " + std::to_string(terms));
  auto theta = fano::theta_matrix(static_cast<std::size_t>(terms));
  std::vector<ExactInt> series;
  try {
    series = fano::z_series_check(static_cast<std::size_t>(terms));
  } catch (const fano::InternalError& e) {
    throw MismatchError(e.what());
  }
  if (as_json) {
    for (std::size_t t = 0; t < theta.size(); ++t) {
      json row = json::array();
      for (const auto& v : theta.row(t)) row.push_back(v.str());
      emit({{"t", t}, {"theta", row}, {"u", series[t].str()}});
    }
    return 0;
  }
  for (std::size_t t = 0; t < theta.size(); ++t) {
    std::cout << "theta[" << t << "]:";
    for (const auto& v : theta.row(t)) std::cout << ' ' << v;
    std::cout << '\n';
  }
  for (std::size_t t = 0; t < series.size(); ++t) std::cout << "u[" << t << "]: " << series[t] << '\n';
  return 0;
}

void note_if_needed(const fano::DegreeTuple& t) {
  if (t.needs_provenance_note()) {
    std::cerr << "note: (" << t.str() << ") has " << t.even_count
              << " even degrees; Catalan index taken as sum(m_i) + evenCount/2, no published value to compare\n";
  }
}

json ci_json(const fano::DegreeTuple& t, const ExactInt& v) {
  json j{{"degrees", t.degrees}, {"value", v.str()}};
  if (t.needs_provenance_note()) j["note"] = "Catalan index taken as sum(m_i) + evenCount/2";
  return j;
}

int cmd_ci(const std::vector<int>& degrees, bool as_json) {
  fano::DegreeTuple t;
  try {
    t = fano::ci_dimension_check(degrees);
  } catch (const fano::DomainError& e) {
    throw UsageError(e.what());
  }
  ExactInt v = fano::ci_lines(t);
  note_if_needed(t);
  if (as_json) {
    emit(ci_json(t, v));
  } else {
    std::cout << v << '\n';
  }
  return 0;
}

void print_codim2_grid(const std::vector<std::pair<fano::DegreeTuple, ExactInt>>& table, int max_degree) {
  std::map<std::pair<int, int>, std::string> cells;
  std::vector<std::size_t> width(static_cast<std::size_t>(max_degree + 1), 1);
  for (const auto& [t, v] : table) {
    const int col = t.degrees[1];
    cells[{t.degrees[0], col}] = v.str();
    width[static_cast<std::size_t>(col)] = std::max(width[static_cast<std::size_t>(col)], v.str().size());
  }
  const std::size_t label = std::to_string(max_degree).size();
  std::ostringstream out;
  out << std::string(label, ' ');
  for (int c = 1; c <= max_degree; ++c) out << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(c)])) << c;
  std::cout << out.str() << '\n';
  for (int r = 1; r <= max_degree; ++r) {
    std::ostringstream line;
    line << std::setw(static_cast<int>(label)) << r;
    for (int c = 1; c <= max_degree; ++c) {
      auto it = cells.find({r, c});
      line << ' ' << std::setw(static_cast<int>(width[static_cast<std::size_t>(c)]))
           << (it == cells.end() ? std::string() : it->second);
    }
    std::string s = line.str();
    s.erase(s.find_last_not_of(' ') + 1);
    std::cout << s << '\n';
  }
}

int cmd_ci_table(int codim, int max_degree, bool as_json) {
  if (codim < 1 || max_degree < 1) throw UsageError("codim and max-degree must be >= 1");
  auto table = fano::ci_table(codim, max_degree);
  for (const auto& [t, v] : table) note_if_needed(t);
  if (as_json) {
    for (const auto& [t, v] : table) emit(ci_json(t, v));
  } else if (codim == 2) {
    print_codim2_grid(table, max_degree);
  } else {
    for (const auto& [t, v] : table) std::cout << t.str() << ": " << v << '\n';
  }
  return 0;
}

int cmd_verify(int max_n, bool as_json) {
  if (max_n < 2) throw UsageError("max must be >= 2, got " + std::to_string(max_n));
  auto results = fano::run_verification(max_n);
  bool all_passed = true;
  for (const auto& r : results) {
    all_passed = all_passed && r.passed;
    if (as_json) {
      emit({{"suite", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    } else {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    }
  }
  if (!all_passed) {
    for (const auto& r : results) {
      if (!r.passed) throw MismatchError("verification failed: " + r.name + ": " + r.detail);
    }
  }
  if (!as_json) std::cout << "all " << results.size() << " suites passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact line counts on generic hypersurfaces and complete intersections"};
  app.require_subcommand(1);

  int n = 0;
  int max_n = 0;
  int terms = 0;
  int codim = 0;
  int max_degree = 0;
  std::string lines_method;
  std::string seq_method;
  std::vector<int> degrees;
  bool as_json = false;

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "emit one JSON object per result"); };

  auto* lines = app.add_subcommand("lines", "compute C_n by one method or all of them");
  lines->add_option("--n", n, "n >= 2; the hypersurface has degree 2n-3 in CP^n")->required();
  lines->add_option("--method", lines_method, "method name or 'all'")->default_val("all");
  add_json(lines);

  auto* seq = app.add_subcommand("seq", "print C_n for n = 2..max");
  seq->add_option("--max", max_n, "last n")->required();
  seq->add_option("--method", seq_method, "method name")->default_val("schubert");
  add_json(seq);

  auto* rec = app.add_subcommand("recursion", "coefficients of C_n in terms of its predecessors");
  rec->add_option("--n", n, "n >= 3")->required();
  add_json(rec);

  auto* gen = app.add_subcommand("genfun", "theta rows and the Z(x) coefficients");
  gen->add_option("--terms", terms, "number of rows / coefficients")->required();
  add_json(gen);

  auto* ci = app.add_subcommand("ci", "lines on a complete intersection");
  ci->add_option("--degrees", degrees, "comma separated degrees, e.g. 3,5")->required()->delimiter(',');
  add_json(ci);

  auto* table = app.add_subcommand("ci-table", "all complete intersections of a codimension");
  table->add_option("--codim", codim, "number of hypersurfaces")->required();
  table->add_option("--max-degree", max_degree, "largest degree")->required();
  add_json(table);

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->add_option("--max", max_n, "largest n")->required();
  add_json(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*lines) return cmd_lines(n, lines_method, as_json);
    if (*seq) return cmd_seq(max_n, seq_method, as_json);
    if (*rec) return cmd_recursion(n, as_json);
    if (*gen) return cmd_genfun(terms, as_json);
    if (*ci) return cmd_ci(degrees, as_json);
    if (*table) return cmd_ci_table(codim, max_degree, as_json);
    if (*verify) return cmd_verify(max_n, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fano::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fano::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const MismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const fano::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
