// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fano/bllp.hpp"
#include "fano/complete_intersection.hpp"
#include "fano/kernel.hpp"
#include "fano/methods.hpp"
#include "fano/schubert.hpp"
#include "fano/zblock.hpp"
#include "oracles.hpp"
#include "sequence_values.hpp"
#include "codim2_table.hpp"

using fano::ExactInt;
using fano::ExactRat;

namespace {

/// Collects the first few mismatches of a criterion.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (failures_ <= 3) detail_ += (detail_.empty() ? "" : "; ") + what;
  }
  bool passed() const { return failures_ == 0; }
  std::string detail() const { return detail_ + (failures_ > 3 ? "; ..." : ""); }

 private:
  int failures_ = 0;
  std::string detail_;
};

ExactRat q(const char* text) { return ExactRat::parse(text); }

std::vector<ExactRat> qs(std::initializer_list<const char*> texts) {
  std::vector<ExactRat> out;
  for (const char* t : texts) out.push_back(q(t));
  return out;
}

std::string str(int v) { return std::to_string(v); }

void sequence_reproduction(Check& c) {
  for (int n = 2; n <= 20; ++n) {
    const ExactInt want = ExactInt::parse(line_count(n));
    for (const auto& m : fano::all_methods()) {
      if (!m.accepts(n)) continue;
      if (m.name == "bombieri" && n > 12) continue;
      c.expect(m.compute(n) == want, std::string(m.name) + " at n=" + str(n));
    }
  }
}

void recursion_rows(Check& c) {
  const std::vector<std::pair<std::vector<ExactRat>, ExactRat>> printed{
      {qs({"81"}), q("-54")},
      {qs({"-12500", "3125/9"}), q("6000")},
      {qs({"3546277", "-3008453/18", "50421/50"}), q("-1234800")},
      {qs({"-8420611932/5", "598375026/5", "-140610978/125", "554769/245"}), q("411505920")},
  };
  for (int n = 3; n <= 6; ++n) {
    auto row = fano::recursion_coeffs(n);
    const auto& [b, f] = printed[static_cast<std::size_t>(n - 3)];
    c.expect(row.b == b && row.f == f, "row n=" + str(n));
  }
}

void generating_function(Check& c) {
  auto theta = fano::theta_matrix(5);
  const std::vector<std::vector<ExactRat>> printed{
      qs({"1"}),
      qs({"-9/2", "1/18"}),
      qs({"125/6", "-125/216", "1/600"}),
      qs({"-72373/720", "61397/12960", "-343/12000", "1/35280"}),
      qs({"2887727/5600", "-3693673/100800", "96441/280000", "-761/1097600", "1/3265920"}),
  };
  for (std::size_t t = 0; t < printed.size(); ++t) c.expect(theta.row(t) == printed[t], "theta row " + str(int(t)));
  const std::vector<long> series{1, -3, 10, -35, 126, -462, 1716, -6435, 24310};
  auto got = fano::z_series_check(9);
  for (std::size_t t = 0; t < series.size(); ++t) c.expect(got[t] == ExactInt(series[t]), "u_" + str(int(t)));
}

void worked_examples(Check& c) {
  using fano::CycleProfile;
  using fano::ZBlock;
  auto length = [](int w, int b, std::vector<int> counts) {
    return fano::zblock_length(ZBlock{w, b}, CycleProfile{std::move(counts)});
  };

  c.expect(fano::w_factor(3, 1) == ExactRat(3) && fano::w_factor(3, 2) == q("3/4"), "W_3");
  c.expect(ExactInt(2) * length(2, 1, {1}) + length(2, 1, {0}) == ExactInt(6), "3(4+2)");
  c.expect(ExactInt(4) * length(2, 2, {2, 0}) + ExactInt(2) * length(2, 2, {0, 1}) == ExactInt(12), "3/4(8+4)");
  c.expect(fano::bombieri_cn(3) == ExactInt(27), "bombieri 3");

  c.expect(fano::w_factor(4, 1) == ExactRat(25), "W_{4,1}");
  c.expect(fano::w_factor(4, 2) == q("725/36"), "W_{4,2}");
  c.expect(fano::w_factor(4, 3) == q("25/16"), "W_{4,3}");
  const std::vector<std::tuple<int, std::vector<int>, long>> nine{
      {1, {1}, 12},       {1, {0}, 24},       {2, {0, 1}, 6},       {2, {2, 0}, 6},       {2, {1, 0}, 12},
      {2, {0, 0}, 12},    {3, {0, 0, 1}, 12}, {3, {1, 1, 0}, 18},   {3, {3, 0, 0}, 6},
  };
  for (const auto& [bulk, counts, want] : nine) {
    c.expect(length(3, bulk, counts) == ExactInt(want), "L" + CycleProfile{counts}.str() + " on B(3," + str(bulk) + ")");
  }
  auto names = [](const std::vector<CycleProfile>& ps) {
    std::string s;
    for (const auto& p : ps) s += p.str();
    return s;
  };
  c.expect(names(fano::feasible_profiles(ZBlock{2, 1})) == "(0)(1)", "Lambda(2,1)");
  c.expect(names(fano::feasible_profiles(ZBlock{3, 3})) == "(3,0,0)(1,1,0)(0,0,1)", "Lambda(3,3)");
  c.expect(names(fano::feasible_profiles(ZBlock{3, 2})) == "(0,0)(1,0)(2,0)(0,1)", "Lambda(3,2)");
  const std::vector<long> sums{48, 72, 144};
  for (int h = 1; h <= 3; ++h) {
    c.expect(fano::weighted_length_sum_enumerated(4, h) == ExactInt(sums[static_cast<std::size_t>(h - 1)]),
             "weighted sum h=" + str(h));
  }
  ExactRat total = ExactRat(25) * ExactRat(48) + q("725/36") * ExactRat(72) + q("25/16") * ExactRat(144);
  c.expect(total == ExactRat(2875) && fano::bombieri_cn(4) == ExactInt(2875), "bombieri 4");
}

void identity_suites(Check& c) {
  for (int n = 2; n <= 9; ++n) {
    for (int h = 1; h <= n - 1; ++h) {
      ExactInt closed = fano::factorial(n) * fano::factorial(n - 1).divexact(ExactInt(n - h));
      c.expect(fano::weighted_length_sum_enumerated(n, h) == closed, "(a) n=" + str(n) + " h=" + str(h));
    }
  }
  for (int w = 0; w <= 5; ++w) {
    for (int b = 0; b <= w; ++b) {
      auto census = oracle::zblock_census(w, b);
      for (const auto& p : fano::candidate_profiles(fano::ZBlock{w, b})) {
        auto it = census.find(p.counts);
        const long want = it == census.end() ? 0 : it->second;
        c.expect(fano::zblock_length(fano::ZBlock{w, b}, p) == ExactInt(want),
                 "(b) B(" + str(w) + "," + str(b) + ") " + p.str());
      }
    }
  }
  for (int n = 3; n <= 12; ++n) {
    auto [lhs, rhs] = fano::w_sum_identity(n);
    c.expect(lhs == rhs, "(c) n=" + str(n));
  }
  for (int n = 2; n <= 12; ++n) {
    for (int m = 0; m <= n - 1; ++m) {
      c.expect(fano::catalan_path_count(n, m) == fano::catalan(m), "(d) n=" + str(n) + " m=" + str(m));
    }
  }
  c.expect(fano::theta_matrix(14) * fano::alpha_block(14) == fano::TriMatrix::identity(14), "(e) size 14");
}

void oracle_pipeline(Check& c) {
  c.expect(fano::expand_det(3).size() == 7, "7 monomials at n=3");
  c.expect(fano::expand_det(4).size() == 189, "189 monomials at n=4");
  const std::vector<long> want{1, 27, 2875, 698005};
  for (int n = 2; n <= 5; ++n) c.expect(fano::bllp_cn(n) == ExactInt(want[n - 2]), "bllp n=" + str(n));
}

std::string run_cli(const std::string& args) {
  std::string out;
  FILE* pipe = popen((std::string(FANO_CLI_PATH) + " " + args).c_str(), "r");
  if (pipe == nullptr) return out;
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
  pclose(pipe);
  return out;
}

void table_one(Check& c) {
  auto table = fano::ci_table(2, 9);
  c.expect(table.size() == kCodimTwoTable.size(), "25 cells");
  for (std::size_t i = 0; i < std::min(table.size(), kCodimTwoTable.size()); ++i) {
    const auto& cell = kCodimTwoTable[i];
    c.expect(table[i].first.degrees == std::vector<int>{cell.d1, cell.d2} && table[i].second == ExactInt::parse(cell.value),
             "cell (" + str(cell.d1) + "," + str(cell.d2) + ")");
  }
  std::istringstream grid(run_cli("ci-table --codim 2 --max-degree 9"));
  std::vector<std::string> printed;
  for (std::string tok; grid >> tok;) printed.push_back(tok);
  for (const auto& cell : kCodimTwoTable) {
    c.expect(std::find(printed.begin(), printed.end(), cell.value) != printed.end(),
             std::string("cli grid missing ") + cell.value);
  }
  for (int n = 2; n <= 10; ++n) {
    c.expect(fano::ci_lines(fano::ci_dimension_check({2 * n - 3})) == ExactInt::parse(line_count(n)),
             "codim 1, n=" + str(n));
  }
}

void corollaries(Check& c) {
  const fano::Method* closed = fano::find_method("zagier-stirling");
  for (int n = 2; n <= 30; ++n) {
    ExactInt cn = closed->compute(n);
    c.expect(cn.is_odd(), "parity n=" + str(n));
    c.expect(fano::satisfies_log_bound(n, cn), "bound n=" + str(n));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"sequence reproduction", sequence_reproduction},
      {"recursion coefficients", recursion_rows},
      {"generating function", generating_function},
      {"worked examples", worked_examples},
      {"identity suites", identity_suites},
      {"oracle pipeline", oracle_pipeline},
      {"codimension 2 table", table_one},
      {"corollary checks", corollaries},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", seconds);
    std::cout << (c.passed() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << timing << ")";
    if (!c.passed()) std::cout << " -- " << c.detail();
    std::cout << '\n';
    if (!c.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
